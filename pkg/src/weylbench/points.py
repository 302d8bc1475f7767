"""Functor-of-points evaluation for the group schemes attached to a grading:
membership of a matrix over a test ring in Aut(A)(R), Stab(R), Diag(R),
Aut(grading)(R); the generic-element centralizer/normalizer tests; the
D(G)-image normalizer test with relation certificates; point enumeration.

The centralizer/normalizer functors quantify over all R-algebras; following
the structure theory they are decided at the single generic algebra RG and
cross-asserted against the direct block/permutation definitions on every
call, so any gap between the two characterizations raises MathIdentityError.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import abgroups, galg
from .comrings import GroupAlgebra
from .errors import (
    CapExceededError,
    InputError,
    MathIdentityError,
    NotEnumerableError,
    OrderViolationError,
)


@dataclass(frozen=True)
class PointMatrix:
    algebra: object
    ring: object
    entries: tuple   # entries[k][j] in R; column j is the image of basis j

    def column(self, j):
        return [self.entries[k][j] for k in range(self.algebra.dim)]

    def to_str(self):
        R = self.ring
        rows = ["[" + ",".join(R.to_str(x) for x in row) + "]" for row in self.entries]
        return "[" + ",".join(rows) + "]"

    def sort_key(self):
        R = self.ring
        return tuple(R.sort_key(x) for row in self.entries for x in row)


def point_matrix(A, R, rows):
    entries = tuple(tuple(tuple(x) for x in row) for row in rows)
    if len(entries) != A.dim or any(len(r) != A.dim for r in entries):
        raise InputError("matrix must be %d x %d" % (A.dim, A.dim))
    return PointMatrix(A, R, entries)


def identity_point(A, R):
    return point_matrix(
        A, R,
        [[R.one if i == j else R.zero() for j in range(A.dim)] for i in range(A.dim)])


# ---------------------------------------------------------------------------
# matrices over a commutative ring


def ring_mat_mul(R, A, B):
    n = len(A)
    out = [[R.zero()] * n for _ in range(n)]
    for i in range(n):
        for t in range(n):
            a = A[i][t]
            if R.is_zero(a):
                continue
            for j in range(n):
                if not R.is_zero(B[t][j]):
                    out[i][j] = R.add(out[i][j], R.mul(a, B[t][j]))
    return out


def ring_det(R, M):
    n = len(M)
    memo = {}

    def minor(r, cols):
        if r == n:
            return R.one
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = R.zero()
        sign = True
        for pos, c in enumerate(cols):
            entry = M[r][c]
            if not R.is_zero(entry):
                sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
                term = R.mul(entry, sub)
                acc = R.add(acc, term if sign else R.neg(term))
            sign = not sign
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def ring_mat_inv(R, M):
    n = len(M)
    d = ring_det(R, M)
    d_inv = R.inv(d)  # raises InputError when det is not a unit
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            sub = [[M[r][c] for c in cols] for r in rows]
            cof = ring_det(R, sub) if sub else R.one
            if (i + j) % 2:
                cof = R.neg(cof)
            out[i][j] = R.mul(d_inv, cof)
    return out


def algebra_mul_over_ring(A, R, x, y):
    """Product in A tensor R of coordinate vectors x, y over R."""
    F = A.field
    n = A.dim
    out = [R.zero()] * n
    for i in range(n):
        if R.is_zero(x[i]):
            continue
        for j in range(n):
            if R.is_zero(y[j]):
                continue
            xy = R.mul(x[i], y[j])
            cell = A.table[i][j]
            for k in range(n):
                if not F.is_zero(cell[k]):
                    out[k] = R.add(out[k], R.mul(xy, R.from_field(cell[k])))
    return out


def apply_point(phi, vec):
    """Apply phi to an F-coefficient vector of the algebra."""
    R = phi.ring
    n = phi.algebra.dim
    out = [R.zero()] * n
    for j, c in enumerate(vec):
        if phi.algebra.field.is_zero(c):
            continue
        rc = R.from_field(c)
        for k in range(n):
            e = phi.entries[k][j]
            if not R.is_zero(e):
                out[k] = R.add(out[k], R.mul(e, rc))
    return out


# ---------------------------------------------------------------------------
# memberships


def automorphism_membership(phi):
    """det(phi) a unit and phi multiplicative on all basis pairs."""
    A, R = phi.algebra, phi.ring
    if not R.is_unit(ring_det(R, [list(r) for r in phi.entries])):
        return False
    cols = [phi.column(j) for j in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = apply_point(phi, A.table[i][j])
            rhs = algebra_mul_over_ring(A, R, cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def _require_automorphism(phi):
    if not automorphism_membership(phi):
        raise InputError("matrix is not an automorphism point")


def stab_membership(gr, phi):
    """Block-diagonal with respect to the homogeneous components."""
    _require_automorphism(phi)
    R = phi.ring
    for k in range(gr.algebra.dim):
        for j in range(gr.algebra.dim):
            if gr.degrees[k] != gr.degrees[j] and not R.is_zero(phi.entries[k][j]):
                return False
    return True


@dataclass
class DiagResult:
    member: bool
    scalars: dict  # support element -> scalar in R


def diag_membership(gr, phi):
    """Each component block a unit scalar multiple of the identity."""
    _require_automorphism(phi)
    R = phi.ring
    scalars = {}
    for g, idx in gr.components.items():
        mu = phi.entries[idx[0]][idx[0]]
        for j in range(gr.algebra.dim):
            for k in range(gr.algebra.dim):
                e = phi.entries[k][j]
                if j in idx and k == j:
                    if e != mu:
                        return DiagResult(False, {})
                elif j in idx or k in idx:
                    if not R.is_zero(e):
                        return DiagResult(False, {})
        if not R.is_unit(mu):
            return DiagResult(False, {})
        scalars[g] = mu
    return DiagResult(True, scalars)


@dataclass
class BlockPermResult:
    ok: bool
    certificates: list   # [(idempotent vec, {g: sigma(g)})]
    witness: object = None


def block_permutations(gr, phi):
    """Per primitive idempotent of R, the component permutation realized by
    phi, or failure with a witness."""
    R = phi.ring
    if not R.is_unit(ring_det(R, [list(r) for r in phi.entries])):
        raise InputError("matrix is not invertible over R")
    n = gr.algebra.dim
    certs = []
    for e in R.idempotents():
        sigma = {}
        for g in gr.support:
            targets = set()
            for j in gr.components[g]:
                for k in range(n):
                    if not R.is_zero(R.mul(e, phi.entries[k][j])):
                        targets.add(gr.degrees[k])
            if len(targets) != 1:
                return BlockPermResult(False, [], witness=(e, g, tuple(sorted(targets))))
            h = targets.pop()
            if gr.component_dim(h) != gr.component_dim(g):
                return BlockPermResult(False, [], witness=(e, g, h))
            sigma[g] = h
        if sorted(sigma.values()) != list(gr.support):
            return BlockPermResult(False, [], witness=(e, "not a bijection"))
        certs.append((e, sigma))
    return BlockPermResult(True, certs)


def autgamma_membership(gr, phi):
    if not automorphism_membership(phi):
        return False
    return block_permutations(gr, phi).ok


# ---------------------------------------------------------------------------
# tau and diagonal points


def tau_from_character(gr, R, values):
    """Diagonal automorphism from character values on the canonical generators
    of the grading group; values must respect generator orders."""
    G = gr.group
    orders = G.generator_orders()
    if len(values) != len(orders):
        raise InputError("need one unit value per group generator")
    for v, d in zip(values, orders):
        if not R.is_unit(v):
            raise OrderViolationError("character value is not a unit")
        if d and R.pow_element(v, d) != R.one:
            raise OrderViolationError("character value violates generator order %d" % d)

    def chi(g):
        acc = R.one
        for c, v in zip(g, values):
            if c == 0:
                continue
            acc = R.mul(acc, R.pow_element(v, c) if c > 0 else
                        R.pow_element(R.inv(v), -c))
        return acc

    n = gr.algebra.dim
    rows = [[R.zero()] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = chi(gr.degrees[i])
    return point_matrix(gr.algebra, R, rows)


def diag_points(gr, R, cap=10**6, cross_check=True):
    """Diag(R) as explicit matrices via characters of the universal group."""
    uni = galg.universal_group(gr)
    U = uni.group
    units = _unit_data_for(R, U)
    chars = abgroups.enumerate_characters(U, units)
    points = []
    for assign in chars:
        values = {}
        for g in gr.support:
            u = uni.deg_u[g]
            acc = R.one
            for c, v in zip(u, assign):
                if c == 0:
                    continue
                acc = R.mul(acc, R.pow_element(v, c) if c > 0 else
                            R.pow_element(R.inv(v), -c))
            values[g] = acc
        n = gr.algebra.dim
        rows = [[R.zero()] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = values[gr.degrees[i]]
        pt = point_matrix(gr.algebra, R, rows)
        if not automorphism_membership(pt):
            raise MathIdentityError("character point is not an automorphism")
        points.append(pt)
    points.sort(key=lambda p: p.sort_key())
    if cross_check and R.element_count() is not None:
        brute = _brute_diag_count(gr, R, cap)
        if brute is not None and brute != len(points):
            raise MathIdentityError(
                "diagonal point count %d != brute-force count %d"
                % (len(points), brute))
    return points


def _unit_data_for(R, U):
    if R.element_count() is not None:
        return R.unit_group().unit_data()
    F = R.field
    if F.kind == "rationals" and R.dim == 1 and U.rank == 0:
        one = R.one
        minus = R.neg(one)
        elems = [(one, 1)] if minus == one else [(one, 1), (minus, 2)]
        return abgroups.UnitData(tuple(elems), tuple(e for e in elems if e[1] > 1))
    raise NotEnumerableError("unit group is not enumerable for this ring")


def _brute_diag_count(gr, R, cap):
    """Independent oracle: iterate unit scalar assignments on the support and
    test the multiplicativity equations directly on the structure constants."""
    supp = list(gr.support)
    count = R.element_count()
    if count is None or count ** len(supp) > cap:
        return None
    units = [u for u in R.elements() if R.is_unit(u)]
    G = gr.group
    A = gr.algebra
    F = A.field
    # one scalar equation per nonzero structure cell
    cells = []
    for i in range(A.dim):
        for j in range(A.dim):
            if any(not F.is_zero(c) for c in A.table[i][j]):
                cells.append((gr.degrees[i], gr.degrees[j],
                              G.add(gr.degrees[i], gr.degrees[j])))
    cells = sorted(set(cells))
    total = 0
    for assign in itertools.product(units, repeat=len(supp)):
        scal = dict(zip(supp, assign))
        if all(R.mul(scal[g], scal[h]) == scal[gh] for (g, h, gh) in cells):
            total += 1
    return total


# ---------------------------------------------------------------------------
# generic-element tests over RG


def generic_psi(gr, R):
    """Diagonal operator over RG scaling component A_g by the group element g."""
    GA = GroupAlgebra(R, gr.group)
    n = gr.algebra.dim
    M = [[GA.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        M[i][i] = GA.monomial(R.one, gr.degrees[i])
    return M


def _ga_mat_mul(GA, A, B):
    n = len(A)
    out = [[GA.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for t in range(n):
            a = A[i][t]
            if GA.is_zero(a):
                continue
            for j in range(n):
                if not GA.is_zero(B[t][j]):
                    out[i][j] = GA.add(out[i][j], GA.mul(a, B[t][j]))
    return out


def _ga_from_ring_matrix(GA, M):
    return [[GA.scalar(x) for x in row] for row in M]


def cent_membership_generic(gr, phi):
    """Commutation with the generic diagonal over RG; must agree with the
    direct stabilizer test (cross-asserted)."""
    _require_automorphism(phi)
    R = phi.ring
    GA = GroupAlgebra(R, gr.group)
    Phi = _ga_from_ring_matrix(GA, [list(r) for r in phi.entries])
    Psi = generic_psi(gr, R)
    commute = _ga_mat_mul(GA, Phi, Psi) == _ga_mat_mul(GA, Psi, Phi)
    direct = stab_membership(gr, phi)
    if commute != direct:
        raise MathIdentityError(
            "generic centralizer test disagrees with the stabilizer test")
    return commute


@dataclass
class NormResult:
    member: bool
    shifts: list        # [(idempotent vec, {g: h})] per block when member
    witness: object = None


def _scalar_blocks_of(gr, GA, M):
    """{g: s_g} if M is block-diagonal with scalar blocks, else None."""
    n = gr.algebra.dim
    scalars = {}
    for g, idx in gr.components.items():
        s = M[idx[0]][idx[0]]
        for j in range(n):
            for k in range(n):
                e = M[k][j]
                if j in idx and k == j:
                    if e != s:
                        return None
                elif j in idx or k in idx:
                    if not GA.is_zero(e):
                        return None
        scalars[g] = s
    return scalars


def norm_membership_generic(gr, phi):
    """Conjugate the generic diagonal by phi over RG, blockwise over the
    idempotent decomposition; membership requires unit scalar blocks.  Must
    agree with the intersection definition (cross-asserted)."""
    _require_automorphism(phi)
    R = phi.ring
    member = True
    shifts = []
    witness = None
    for e in R.idempotents():
        S, project, inject = R.block(e)
        GA = GroupAlgebra(S, gr.group)
        phi_e = [[project(x) for x in row] for row in phi.entries]
        phi_inv = ring_mat_inv(S, phi_e)
        Phi = _ga_from_ring_matrix(GA, phi_e)
        PhiInv = _ga_from_ring_matrix(GA, phi_inv)
        Psi = generic_psi(gr, S)
        M = _ga_mat_mul(GA, PhiInv, _ga_mat_mul(GA, Psi, Phi))
        scalars = _scalar_blocks_of(gr, GA, M)
        if scalars is None:
            member = False
            witness = (e, "conjugate is not component-scalar")
            break
        PsiInv = [[GA.zero() for _ in range(len(Psi))] for _ in range(len(Psi))]
        for i in range(len(Psi)):
            PsiInv[i][i] = GA.monomial(S.one, gr.group.neg(gr.degrees[i]))
        Minv = _ga_mat_mul(GA, PhiInv, _ga_mat_mul(GA, PsiInv, Phi))
        inv_scalars = _scalar_blocks_of(gr, GA, Minv)
        if inv_scalars is None:
            member = False
            witness = (e, "inverse conjugate is not component-scalar")
            break
        shift = {}
        for g in gr.support:
            if GA.mul(scalars[g], inv_scalars[g]) != GA.one():
                member = False
                witness = (e, g, "scalar is not a unit")
                break
            mono = GA.as_monomial(scalars[g])
            if mono is None or not S.is_unit(mono[0]):
                raise MathIdentityError(
                    "normalizer scalar is not a unit monomial; proof shape violated")
            shift[g] = mono[1]
        if not member:
            break
        shifts.append((e, shift))
    direct = autgamma_membership(gr, phi)
    if member != direct:
        raise MathIdentityError(
            "generic normalizer test disagrees with the intersection definition")
    return NormResult(member, shifts if member else [], witness)


@dataclass
class DGroupResult:
    status: str              # 'member' | 'nonmember' | 'indeterminate'
    forced: dict             # support element -> forced group element value
    relation: object = None  # violated relation vector over the support
    relation_value: object = None


def dgroup_norm_membership(gr, phi):
    """Normalizer test against the image of D(G) itself: conjugating the
    generic character forces values on the support; membership needs those
    forced values to satisfy every relation of the support inside G."""
    if not autgamma_membership(gr, phi):
        raise InputError("matrix is not a point of the grading automorphism scheme")
    R = phi.ring
    if len(R.idempotents()) != 1:
        raise InputError("test requires a connected ring")
    G = gr.group
    sub = abgroups.subgroup_generated(G, list(gr.support))
    for gen in G.generators():
        if not sub.contains(gen):
            return DGroupResult("indeterminate", {})

    GA = GroupAlgebra(R, G)
    entries = [list(r) for r in phi.entries]
    Phi = _ga_from_ring_matrix(GA, entries)
    PhiInv = _ga_from_ring_matrix(GA, ring_mat_inv(R, entries))
    Psi = generic_psi(gr, R)
    M = _ga_mat_mul(GA, Phi, _ga_mat_mul(GA, Psi, PhiInv))
    scalars = _scalar_blocks_of(gr, GA, M)
    if scalars is None:
        raise MathIdentityError("conjugate of a diagonal point is not diagonal")
    forced = {}
    for h in gr.support:
        mono = GA.as_monomial(scalars[h])
        if mono is None or mono[0] != R.one:
            raise MathIdentityError("forced character value is not a group monomial")
        forced[h] = mono[1]
    supp = list(gr.support)
    for row in sub.relations:
        acc = G.identity()
        for c, s in zip(row, supp):
            acc = G.add(acc, G.scale(c, forced[s]))
        if acc != G.identity():
            return DGroupResult("nonmember", forced, relation=tuple(row),
                                relation_value=acc)
    return DGroupResult("member", forced)


# ---------------------------------------------------------------------------
# brute-force enumeration over finite rings


class RingTable:
    """Integer-indexed add/mul tables for a small finite ring."""

    MAX_ELEMENTS = 512

    def __init__(self, R):
        count = R.element_count()
        if count is None:
            raise NotEnumerableError("ring over an infinite field")
        if count > self.MAX_ELEMENTS:
            raise CapExceededError("ring too large for table form (%d)" % count)
        self.ring = R
        self.elems = sorted(R.elements(), key=R.sort_key)
        self.index = {e: i for i, e in enumerate(self.elems)}
        n = len(self.elems)
        self.add_t = [[self.index[R.add(a, b)] for b in self.elems] for a in self.elems]
        self.mul_t = [[self.index[R.mul(a, b)] for b in self.elems] for a in self.elems]
        self.neg_t = [self.index[R.neg(a)] for a in self.elems]
        self.unit = [R.is_unit(a) for a in self.elems]
        self.zero_i = self.index[R.zero()]
        self.one_i = self.index[R.one]


def _enumeration_plan(A):
    """Column ordering with derivations: returns (steps, checks) where steps
    are ('enum', j) or ('derive', j, i, jj, inv_coeff) and checks[s] lists the
    multiplicativity constraints first fully determined after step s."""
    F = A.field
    n = A.dim
    supp = {}
    for i in range(n):
        for j in range(n):
            supp[(i, j)] = tuple(k for k in range(n)
                                 if not F.is_zero(A.table[i][j][k]))
    steps = []
    unknown = set(range(n))
    derived_from = set()
    while unknown:
        found = None
        for (i, jj) in sorted(supp):
            if i in unknown or jj in unknown or (i, jj) in derived_from:
                continue
            s = supp[(i, jj)]
            if len(s) == 1 and s[0] in unknown:
                k = s[0]
                found = ("derive", k, i, jj, F.inv(A.table[i][jj][k]))
                derived_from.add((i, jj))
                break
        if found is None:
            j = min(unknown)
            found = ("enum", j)
        steps.append(found)
        unknown.discard(found[1])
    stage_of = {col: s for s, step in enumerate(steps) for col in [step[1]]}
    checks = [[] for _ in steps]
    for (i, j), s in supp.items():
        if (i, j) in derived_from:
            continue
        need = {i, j} | set(s)
        stage = max(stage_of[c] for c in need)
        checks[stage].append((i, j))
    return steps, checks


def _estimated_nodes(A, R):
    steps, _ = _enumeration_plan(A)
    count = R.element_count()
    if count is None:
        return None
    nodes = 1
    for step in steps:
        if step[0] == "enum":
            nodes *= count**A.dim
            if nodes > 10**12:
                return nodes
    return nodes


def enumerate_points(gr, R, which="aut", cap=10**8):
    """Exhaustive, deterministic list of points over a finite ring.

    which: 'aut' | 'stab' | 'autgamma'.  Enumerates with constraint pruning
    and column derivation, then re-verifies every survivor exactly."""
    A = gr.algebra
    nodes = _estimated_nodes(A, R)
    if nodes is None:
        raise NotEnumerableError("cannot enumerate points over an infinite ring")
    if nodes > cap:
        raise CapExceededError("estimated enumeration size %d exceeds cap %d"
                               % (nodes, cap))
    table = RingTable(R)
    steps, checks = _enumeration_plan(A)
    F = A.field
    n = A.dim
    nz = {}
    for i in range(n):
        for j in range(n):
            nz[(i, j)] = [(k, table.index[R.from_field(A.table[i][j][k])])
                          for k in range(n) if not F.is_zero(A.table[i][j][k])]
    mul_t, add_t = table.mul_t, table.add_t
    zero_i = table.zero_i

    def col_product(x, y):
        out = [zero_i] * n
        for i in range(n):
            xi = x[i]
            if xi == zero_i:
                continue
            for j in range(n):
                yj = y[j]
                if yj == zero_i:
                    continue
                xy = mul_t[xi][yj]
                for (k, c_idx) in nz[(i, j)]:
                    out[k] = add_t[out[k]][mul_t[xy][c_idx]]
        return out

    def check_ok(cols, i, j):
        rhs = col_product(cols[i], cols[j])
        lhs = [zero_i] * n
        for (k, c_idx) in nz[(i, j)]:
            ck = cols[k]
            for t in range(n):
                if ck[t] != zero_i:
                    lhs[t] = add_t[lhs[t]][mul_t[ck[t]][c_idx]]
        return lhs == rhs

    count = len(table.elems)
    survivors = []

    def det_unit(cols):
        acc = zero_i
        for perm in itertools.permutations(range(n)):
            parity = _perm_parity(perm)
            term = table.one_i
            for r, c in zip(perm, range(n)):
                term = mul_t[term][cols[c][r]]
                if term == zero_i:
                    break
            if term == zero_i:
                continue
            if parity < 0:
                term = table.neg_t[term]
            acc = add_t[acc][term]
        return table.unit[acc]

    def dfs(stage, cols):
        if stage == len(steps):
            if det_unit(cols):
                survivors.append([list(c) for c in cols])
            return
        step = steps[stage]
        if step[0] == "enum":
            j = step[1]
            for cand in itertools.product(range(count), repeat=n):
                cols[j] = cand
                if all(check_ok(cols, a, b) for (a, b) in checks[stage]):
                    dfs(stage + 1, cols)
            cols[j] = None
        else:
            _, k, i, jj, inv_c = step
            prod = col_product(cols[i], cols[jj])
            ic = table.index[R.from_field(inv_c)]
            cols[k] = tuple(mul_t[ic][x] for x in prod)
            if all(check_ok(cols, a, b) for (a, b) in checks[stage]):
                dfs(stage + 1, cols)
            cols[k] = None

    dfs(0, [None] * n)

    points = []
    for cols in survivors:
        rows = [[table.elems[cols[j][k]] for j in range(n)] for k in range(n)]
        pt = point_matrix(A, R, rows)
        if not automorphism_membership(pt):
            raise MathIdentityError("fast enumeration produced a non-automorphism")
        points.append(pt)
    if which == "stab":
        points = [p for p in points if stab_membership(gr, p)]
    elif which == "autgamma":
        points = [p for p in points if block_permutations(gr, p).ok]
    elif which != "aut":
        raise InputError("unknown point set %r" % which)
    points.sort(key=lambda p: p.sort_key())
    return points


def _perm_parity(perm):
    seen = [False] * len(perm)
    parity = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


# ---------------------------------------------------------------------------
# point-wise normalizer (for comparing with the scheme-level test)


def pointwise_normalizer(points, dpoints):
    """Elements of `points` normalizing the set `dpoints` by conjugation."""
    R = points[0].ring if points else None
    dset = {p.entries for p in dpoints}
    out = []
    for p in points:
        M = [list(r) for r in p.entries]
        Minv = ring_mat_inv(R, M)
        ok = True
        for d in dpoints:
            conj = ring_mat_mul(R, ring_mat_mul(R, M, [list(r) for r in d.entries]), Minv)
            if tuple(tuple(r) for r in conj) not in dset:
                ok = False
                break
        if ok:
            out.append(p)
    return out
