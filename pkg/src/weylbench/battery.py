"""Cross-assertion battery: on a set of automorphism points over a test ring,
run the generic centralizer test against the direct stabilizer test and the
generic normalizer test against the intersection definition.  Any mismatch
raises MathIdentityError from inside the membership functions themselves.

Small point groups are enumerated exhaustively; large or infinite ones are
sampled from constructed points (diagonal characters, monomial witnesses,
blockwise combinations, random invertibles where every invertible works).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import galg, points as pts, weyl
from .errors import (
    CapExceededError,
    FactorizationIncompleteError,
    MathIdentityError,
    NotEnumerableError,
    UnknownSolvabilityError,
)


@dataclass
class BatteryResult:
    mode: str              # 'enumerated' | 'sampled'
    evaluations: int
    distinct_points: int
    cent_checked: int
    norm_checked: int
    warn_nonsmooth: bool


def diag_scheme_nonsmooth(gr):
    """True when the diagonal scheme has infinitesimal points: the base-field
    characteristic divides a torsion order of the universal group."""
    p = gr.algebra.field.characteristic()
    if p == 0:
        return False
    U = galg.universal_group(gr).group
    return any(d % p == 0 for d in U.torsion)


def theorem_battery(gr, R, enum_budget=200_000, sample_target=110, seed=0x5EED):
    points, mode, evaluations = battery_points(gr, R, enum_budget, sample_target, seed)
    warn = False
    nonsmooth = None
    cent = norm = 0
    for p in points:
        pts.cent_membership_generic(gr, p)
        cent += 1
        res = pts.norm_membership_generic(gr, p)
        norm += 1
        if res.member and not pts.stab_membership(gr, p):
            if nonsmooth is None:
                nonsmooth = diag_scheme_nonsmooth(gr)
            if nonsmooth:
                warn = True
    return BatteryResult(mode, evaluations, len(points), cent, norm, warn)


def battery_points(gr, R, enum_budget=200_000, sample_target=110, seed=0x5EED,
                   point_cap=384):
    """(distinct automorphism points, mode, evaluation count).

    Full enumeration when both the search and the resulting point group are
    small; very large point groups are stride-sampled from the enumeration."""
    A = gr.algebra
    count = R.element_count()
    if count is not None and count <= pts.RingTable.MAX_ELEMENTS:
        nodes = pts._estimated_nodes(A, R)
        if nodes is not None and nodes <= enum_budget:
            enumerated = pts.enumerate_points(gr, R, "aut", cap=enum_budget)
            if len(enumerated) <= point_cap:
                return enumerated, "enumerated", len(enumerated)
            stride = max(1, len(enumerated) // max(sample_target, 128))
            sampled = enumerated[::stride]
            return sampled, "sampled", len(sampled)
    sampled = _sampled_points(gr, R, sample_target, seed)
    return sampled, "sampled", max(sample_target, len(sampled))


def _sampled_points(gr, R, target, seed):
    rng = random.Random(seed)
    A = gr.algebra
    pool = {pts.identity_point(A, R).entries}

    for p in _diagonal_sample(gr, R, rng):
        pool.add(p.entries)
    for p in _monomial_sample(gr, R):
        pool.add(p.entries)
    for p in _base_field_sample(gr, R):
        pool.add(p.entries)
    if _all_products_zero(A):
        for p in _random_invertibles(gr, R, rng, 40):
            pool.add(p.entries)
    pool = _blockwise_combinations(gr, R, pool, rng)

    base = [pts.PointMatrix(A, R, e) for e in sorted(pool)]
    seen = set(pool)
    products = 0
    while len(seen) < target and products < 4 * target and len(base) > 1:
        a, b = rng.choice(base), rng.choice(base)
        prod = pts.ring_mat_mul(R, [list(r) for r in a.entries],
                                [list(r) for r in b.entries])
        ent = tuple(tuple(r) for r in prod)
        products += 1
        if ent not in seen:
            seen.add(ent)
            base.append(pts.PointMatrix(A, R, ent))
    out = [pts.PointMatrix(A, R, e) for e in sorted(seen)]
    for p in out:
        if not pts.automorphism_membership(p):
            raise MathIdentityError("sampled point is not an automorphism")
    return out


def _all_products_zero(A):
    F = A.field
    return all(F.is_zero(c) for row in A.table for cell in row for c in cell)


def _diagonal_sample(gr, R, rng, full_cap=1500, keep=64):
    count = R.element_count()
    if count is not None and count <= full_cap:
        try:
            dp = pts.diag_points(gr, R, cross_check=False)
        except (NotEnumerableError, CapExceededError, FactorizationIncompleteError):
            return []
        if len(dp) > keep:
            dp = dp[::max(1, len(dp) // keep)][:keep]
        return dp
    # large or infinite ring: torsion units cover torsion generators of the
    # universal group; free generators get a few random units
    uni = galg.universal_group(gr)
    U = uni.group
    torsion_units = _torsion_units(R)
    pools = []
    for d in U.generator_orders():
        if d:
            pools.append([u for u in torsion_units
                          if R.pow_element(u, d) == R.one])
        else:
            pools.append(_random_units(R, rng, 4))
    assigns = [[]]
    for pool in pools:
        assigns = [a + [v] for a in assigns for v in pool]
        if len(assigns) > 64:
            assigns = assigns[:64]
    out = []
    for assign in assigns:
        values = {}
        for g in gr.support:
            u = uni.deg_u[g]
            acc = R.one
            for c, v in zip(u, assign):
                if c:
                    acc = R.mul(acc, R.pow_element(v, c) if c > 0
                                else R.pow_element(R.inv(v), -c))
            values[g] = acc
        n = gr.algebra.dim
        rows = [[R.zero()] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = values[gr.degrees[i]]
        p = pts.point_matrix(gr.algebra, R, rows)
        if pts.automorphism_membership(p):
            out.append(p)
    return out


def _torsion_units(R, cap=96):
    """Finite-order units found structurally: +-1, group-algebra monomials,
    and products thereof."""
    seeds = {R.one, R.neg(R.one)}
    basis = getattr(R, "group_basis", None)
    if basis is not None:
        for idx in range(len(basis)):
            vec = [R.field.zero()] * R.dim
            vec[idx] = R.field.one()
            seeds.add(tuple(vec))
    closed = set(seeds)
    frontier = list(seeds)
    while frontier and len(closed) < cap:
        x = frontier.pop()
        for y in list(closed):
            z = R.mul(x, y)
            if z not in closed:
                closed.add(z)
                frontier.append(z)
    out = []
    for u in sorted(closed, key=R.sort_key):
        acc = u
        order = 1
        finite = False
        for _ in range(cap):
            if acc == R.one:
                finite = True
                break
            acc = R.mul(acc, u)
            order += 1
        if finite:
            out.append(u)
    return out


def _random_units(R, rng, k):
    out = []
    tries = 0
    while len(out) < k and tries < 60:
        tries += 1
        vec = tuple(R.field.random_element(rng, 5) for _ in range(R.dim))
        if R.is_unit(vec) and vec not in out:
            out.append(vec)
    if R.one not in out:
        out.append(R.one)
    return out


def _monomial_sample(gr, R):
    """Monomial witnesses from the thin solver over the base field."""
    if not gr.is_thin():
        return []
    out = []
    for sigma in weyl.admissible_permutations(gr):
        system = weyl.thin_constraints(gr, sigma)
        try:
            res = weyl.thin_solve(system, "field")
        except UnknownSolvabilityError:
            continue
        if res.status == "solvable" and res.witness is not None:
            out.append(weyl.monomial_point(gr, system, res.witness, R))
    return out


def _base_field_sample(gr, R, budget=20_000):
    """Automorphism points over the base field embedded into R."""
    from .comrings import base_field_ring

    F = gr.algebra.field
    if not F.is_finite():
        return []
    base = base_field_ring(F)
    nodes = pts._estimated_nodes(gr.algebra, base)
    if nodes is None or nodes > budget:
        return []
    try:
        field_points = pts.enumerate_points(gr, base, "aut", cap=budget)
    except (CapExceededError, NotEnumerableError):
        return []
    out = []
    for p in field_points[:64]:
        rows = [[R.from_field(x[0]) for x in row] for row in p.entries]
        out.append(pts.point_matrix(gr.algebra, R, rows))
    return out


def _random_invertibles(gr, R, rng, k):
    A = gr.algebra
    n = A.dim
    out = []
    tries = 0
    while len(out) < k and tries < 10 * k:
        tries += 1
        rows = [[tuple(R.field.random_element(rng, 5) for _ in range(R.dim))
                 for _ in range(n)] for _ in range(n)]
        p = pts.point_matrix(A, R, rows)
        if pts.automorphism_membership(p):
            out.append(p)
    return out


def _blockwise_combinations(gr, R, pool, rng, limit=48):
    """For disconnected R, mix pool points blockwise: sum of e_i * p_i."""
    idems = R.idempotents()
    if len(idems) < 2 or len(pool) < 2:
        return pool
    base = sorted(pool)
    out = set(pool)
    combos = 0
    n = gr.algebra.dim
    while combos < limit:
        combos += 1
        acc = [[R.zero()] * n for _ in range(n)]
        for e in idems:
            choice = rng.choice(base)
            for i in range(n):
                for j in range(n):
                    acc[i][j] = R.add(acc[i][j], R.mul(e, choice[i][j]))
        p = pts.PointMatrix(gr.algebra, R, tuple(tuple(r) for r in acc))
        if pts.automorphism_membership(p):
            out.add(p.entries)
    return out
