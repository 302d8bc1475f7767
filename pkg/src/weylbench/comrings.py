"""Finite-dimensional commutative unital test rings by structure constants,
idempotent decomposition, unit/nilpotent predicates, unit-group enumeration,
and sparse group-algebra arithmetic RG.

Ring elements are tuples of field elements (coordinates in the canonical
basis).  Ring axioms are verified at construction; primitive idempotents and
the nilradical are computed on demand and cached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .abgroups import FGAbelianGroup, Presentation, group_from_presentation
from .errors import (
    CapExceededError,
    FactorizationIncompleteError,
    InputError,
    MathIdentityError,
    NotEnumerableError,
    RingAxiomError,
    SingularMatrixError,
)
from .factorization import crt_idempotent_polys, partial_factor
from .scalars import poly_divmod, poly_eval, poly_trim, split_bracketed


class TestRing:
    """Commutative unital associative algebra over an ExactField, given by
    structure constants table[i][j] (a coordinate vector) and a unit vector."""

    __test__ = False  # "Test" prefix is domain vocabulary, not a pytest class

    def __init__(self, field, table, one, label=None, idempotent_hint=None, _skip_checks=False):
        self.field = field
        self.dim = len(table)
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.one = tuple(one)
        self.label = label or "ring"
        self._hint = idempotent_hint
        self._idempotents = None
        self._nilradical = None
        self._unit_group = None
        self._block_cache = {}
        if not _skip_checks:
            self._check_axioms()

    # -- element helpers ----------------------------------------------------

    def zero(self):
        return (self.field.zero(),) * self.dim

    def from_field(self, c):
        return self.scal(c, self.one)

    def from_int(self, n):
        return self.from_field(self.field.from_int(n))

    def is_zero(self, x):
        return all(self.field.is_zero(c) for c in x)

    def add(self, x, y):
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        F = self.field
        return tuple(F.neg(a) for a in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scal(self, c, x):
        F = self.field
        return tuple(F.mul(c, a) for a in x)

    def mul(self, x, y):
        F = self.field
        out = [F.zero()] * self.dim
        for i, a in enumerate(x):
            if F.is_zero(a):
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if F.is_zero(b):
                    continue
                ab = F.mul(a, b)
                cell = row[j]
                for k in range(self.dim):
                    if not F.is_zero(cell[k]):
                        out[k] = F.add(out[k], F.mul(ab, cell[k]))
        return tuple(out)

    def pow_element(self, x, n):
        out = self.one
        while n > 0:
            if n & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            n >>= 1
        return out

    def mul_matrix(self, x):
        """Matrix of multiplication-by-x on the canonical basis (columns)."""
        F = self.field
        M = [[F.zero()] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            col = self.mul(x, self._basis_vec(j))
            for k in range(self.dim):
                M[k][j] = col[k]
        return M

    def _basis_vec(self, i):
        F = self.field
        return tuple(F.one() if k == i else F.zero() for k in range(self.dim))

    def is_unit(self, x):
        return not self.field.is_zero(linalg.det(self.field, self.mul_matrix(x)))

    def is_nilpotent(self, x):
        return self.is_zero(self.pow_element(x, self.dim))

    def inv(self, x):
        try:
            return tuple(linalg.solve(self.field, self.mul_matrix(x), list(self.one)))
        except SingularMatrixError:
            raise InputError("element is not a unit")

    def element_count(self):
        q = self.field.cardinality()
        return None if q is None else q**self.dim

    def elements(self):
        if self.element_count() is None:
            raise NotEnumerableError("ring over an infinite field")
        return (tuple(v) for v in itertools.product(self.field.elements(), repeat=self.dim))

    def sort_key(self, x):
        return tuple(self.field.sort_key(c) for c in x)

    def to_str(self, x):
        if self.dim == 1:
            return self.field.to_str(x[0])
        return "[" + ",".join(self.field.to_str(c) for c in x) + "]"

    def parse(self, s):
        s = s.strip()
        if self.dim == 1:
            return (self.field.parse(s),)
        if not (s.startswith("[") and s.endswith("]")):
            raise InputError("ring element literal must be a bracketed vector")
        parts = split_bracketed(s[1:-1])
        if len(parts) != self.dim:
            raise InputError("ring element needs %d coordinates" % self.dim)
        return tuple(self.field.parse(p) for p in parts)

    # -- construction checks -------------------------------------------------

    def _check_axioms(self):
        F = self.field
        n = self.dim
        if len(self.one) != n or any(len(row) != n for row in self.table):
            raise RingAxiomError("structure constant dimensions inconsistent")
        for i in range(n):
            for j in range(i, n):
                if self.table[i][j] != self.table[j][i]:
                    raise RingAxiomError("multiplication table is not commutative")
        basis = [self._basis_vec(i) for i in range(n)]
        for i in range(n):
            if self.mul(self.one, basis[i]) != basis[i]:
                raise RingAxiomError("claimed unit does not act as identity")
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    left = self.mul(ij, basis[k])
                    right = self.mul(basis[i], self.mul(basis[j], basis[k]))
                    if left != right:
                        raise RingAxiomError(
                            "multiplication not associative at basis triple (%d,%d,%d)"
                            % (i, j, k))

    # -- nilradical and idempotents ------------------------------------------

    def nilradical(self):
        if self._nilradical is None:
            self._nilradical = tuple(tuple(v) for v in _nilradical_basis(self))
            _verify_nilradical(self, self._nilradical)
        return self._nilradical

    def idempotents(self):
        """Primitive orthogonal idempotents, lexicographically ordered."""
        if self._idempotents is None:
            if self._hint is not None:
                idems = [tuple(e) for e in self._hint]
                _verify_idempotent_family(self, idems)
            else:
                idems = decompose_ring(self)
            self._idempotents = tuple(sorted(idems, key=self.sort_key))
        return self._idempotents

    def is_connected(self):
        return len(self.idempotents()) == 1

    def block(self, e):
        """The block ring eR with unit e; returns (ring, project, inject)."""
        e = tuple(e)
        if e in self._block_cache:
            return self._block_cache[e]
        F = self.field
        span = []
        for i in range(self.dim):
            span.append(list(self.mul(e, self._basis_vec(i))))
        R, pivots = linalg.rref(F, span)
        basis = [tuple(R[r]) for r in range(len(pivots))]

        def project(x):
            xe = self.mul(e, x)
            coords = linalg.solve(F, _columns(F, basis), list(xe))
            return tuple(coords)

        def inject(bx):
            acc = self.zero()
            for c, b in zip(bx, basis):
                acc = self.add(acc, self.scal(c, b))
            return acc

        k = len(basis)
        table = [[None] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                table[i][j] = project(self.mul(basis[i], basis[j]))
        ring = TestRing(F, table, project(e), label="%s|block" % self.label)
        self._block_cache[e] = (ring, project, inject)
        return self._block_cache[e]

    def unit_group(self, cap=10**6):
        if self._unit_group is None:
            self._unit_group = enumerate_units(self, cap)
        return self._unit_group


def _columns(F, rows):
    """Transpose a list of row vectors into a column matrix."""
    n = len(rows[0])
    return [[rows[r][c] for r in range(len(rows))] for c in range(n)]


# ---------------------------------------------------------------------------
# constructors


def base_field_ring(F, label=None):
    return TestRing(F, [[(F.one(),)]], (F.one(),), label=label or "base")


def dual_numbers(F, n, label=None):
    """F[eps]/(eps^n); n = 1 degenerates to the base field."""
    if n < 1:
        raise InputError("dual number order must be >= 1")
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = [F.zero()] * n
            if i + j < n:
                v[i + j] = F.one()
            table[i][j] = tuple(v)
    one = tuple(F.one() if k == 0 else F.zero() for k in range(n))
    return TestRing(F, table, one, label=label or "dual%d" % n)


def product_ring(R1, R2, label=None):
    if R1.field != R2.field:
        raise InputError("product factors must share the base field")
    F = R1.field
    n1, n2 = R1.dim, R2.dim
    n = n1 + n2

    def emb1(v):
        return tuple(v) + (F.zero(),) * n2

    def emb2(v):
        return (F.zero(),) * n1 + tuple(v)

    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i < n1 and j < n1:
                table[i][j] = emb1(R1.table[i][j])
            elif i >= n1 and j >= n1:
                table[i][j] = emb2(R2.table[i - n1][j - n1])
            else:
                table[i][j] = (F.zero(),) * n
    one = tuple(R1.one) + tuple(R2.one)
    hint = [emb1(e) for e in R1.idempotents()] + [emb2(e) for e in R2.idempotents()]
    return TestRing(F, table, one, label=label or "product", idempotent_hint=hint)


def group_algebra_finite(F, G, label=None):
    """FG for a finite abelian group G; basis indexed by sorted group elements."""
    if not isinstance(G, FGAbelianGroup) or not G.is_finite():
        raise InputError("group algebra test ring needs a finite group")
    elems = sorted(G.elements())
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    table = [[None] * n for _ in range(n)]
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            v = [F.zero()] * n
            v[index[G.add(g, h)]] = F.one()
            table[i][j] = tuple(v)
    one = [F.zero()] * n
    one[index[G.identity()]] = F.one()
    ring = TestRing(F, table, tuple(one), label=label or "groupalg")
    ring.group_basis = tuple(elems)
    return ring


def truncated_poly(F, modulus, label=None):
    """F[t]/(f) for monic f of degree >= 1."""
    modulus = poly_trim(F, list(modulus))
    if len(modulus) < 2:
        raise InputError("modulus must have degree >= 1")
    if not F.eq(modulus[-1], F.one()):
        raise InputError("modulus must be monic")
    d = len(modulus) - 1
    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            prod = [F.zero()] * (i + j) + [F.one()]
            rem = poly_divmod(F, prod, modulus)[1]
            rem = rem + [F.zero()] * (d - len(rem))
            table[i][j] = tuple(rem[:d])
    one = tuple(F.one() if k == 0 else F.zero() for k in range(d))
    return TestRing(F, table, one, label=label or "trunc")


def build_ring(spec):
    """spec: ('base', F) | ('dual', F, n) | ('product', R1, R2)
    | ('groupalg', F, G) | ('trunc', F, modulus coefficients)."""
    tag = spec[0]
    if tag == "base":
        return base_field_ring(spec[1])
    if tag == "dual":
        return dual_numbers(spec[1], spec[2])
    if tag == "product":
        return product_ring(spec[1], spec[2])
    if tag == "groupalg":
        return group_algebra_finite(spec[1], spec[2])
    if tag == "trunc":
        return truncated_poly(spec[1], spec[2])
    raise InputError("unknown ring spec %r" % (tag,))


def unit_and_nilpotent_tests(R, x):
    return {"unit": R.is_unit(x), "nilpotent": R.is_nilpotent(x)}


def idempotent_decomposition(R):
    return list(R.idempotents())


# ---------------------------------------------------------------------------
# nilradical


def _nilradical_basis(R):
    F = R.field
    n = R.dim
    p = F.characteristic()
    if p == 0:
        # radical of the trace form B(x, y) = trace(L_{xy})  (Dickson)
        T = [[None] * n for _ in range(n)]
        basis = [R._basis_vec(i) for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                M = R.mul_matrix(R.mul(basis[i], basis[j]))
                tr = F.zero()
                for k in range(n):
                    tr = F.add(tr, M[k][k])
                T[i][j] = tr
                T[j][i] = tr
        return linalg.nullspace(F, T)
    q = F.cardinality()
    if q is None:
        raise FactorizationIncompleteError("positive characteristic needs a finite field")
    qm = q
    while qm < n:
        qm *= q
    # x -> x^(q^m) is F-linear; its kernel is exactly the nilradical
    cols = [R.pow_element(R._basis_vec(i), qm) for i in range(n)]
    M = [[cols[j][k] for j in range(n)] for k in range(n)]
    return linalg.nullspace(F, M)


def _verify_nilradical(R, basis):
    for v in basis:
        if not R.is_nilpotent(v):
            raise MathIdentityError("claimed nilradical vector is not nilpotent")
    # the quotient must be reduced
    if basis:
        qr = _quotient_ring(R, [list(v) for v in basis])
        sub = _nilradical_basis(qr.ring)
        if sub:
            raise MathIdentityError("quotient by nilradical is not reduced")


# ---------------------------------------------------------------------------
# quotients by an ideal subspace


@dataclass
class _Quotient:
    ring: TestRing
    project: object   # vec in R -> vec in quotient
    lift: object      # vec in quotient -> representative in R


def _quotient_ring(R, ideal_basis):
    F = R.field
    red, pivots = linalg.rref(F, [list(v) for v in ideal_basis])
    red = red[: len(pivots)]
    free = [c for c in range(R.dim) if c not in pivots]

    def reduce_vec(x):
        x = list(x)
        for r, pc in enumerate(pivots):
            c = x[pc]
            if not F.is_zero(c):
                x = [F.sub(a, F.mul(c, b)) for a, b in zip(x, red[r])]
        return tuple(x[c] for c in free)

    def lift_vec(qx):
        x = [F.zero()] * R.dim
        for c, coord in zip(free, qx):
            x[c] = coord
        return tuple(x)

    k = len(free)
    # ideal check: basis * ideal stays in the ideal (reduces to zero)
    for i in range(R.dim):
        for v in ideal_basis:
            prod = R.mul(R._basis_vec(i), tuple(v))
            if any(not F.is_zero(c) for c in reduce_vec(prod)):
                raise MathIdentityError("subspace is not an ideal")
    table = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            prod = R.mul(lift_vec(_unit_vec(F, k, a)), lift_vec(_unit_vec(F, k, b)))
            table[a][b] = reduce_vec(prod)
    ring = TestRing(F, table, reduce_vec(R.one), label="%s/nil" % R.label)
    return _Quotient(ring, reduce_vec, lift_vec)


def _unit_vec(F, n, i):
    return tuple(F.one() if k == i else F.zero() for k in range(n))


# ---------------------------------------------------------------------------
# idempotent decomposition


def decompose_ring(R, use_hints=False):
    """Primitive orthogonal idempotents of R via nilradical + semisimple split
    + Newton lifting (e -> 3e^2 - 2e^3, valid in every characteristic)."""
    if use_hints and R._hint is not None:
        idems = [tuple(e) for e in R._hint]
        _verify_idempotent_family(R, idems)
        return sorted(idems, key=R.sort_key)
    nil = R.nilradical()
    if nil:
        quot = _quotient_ring(R, [list(v) for v in nil])
        bar_idems = _split_semisimple(quot.ring)
        idems = [_newton_lift(R, quot.lift(e)) for e in bar_idems]
    else:
        idems = [tuple(e) for e in _split_semisimple(R)]
    _verify_idempotent_family(R, idems)
    return sorted(idems, key=R.sort_key)


def _newton_lift(R, e):
    """Lift an idempotent-mod-nilradical to a true idempotent."""
    three = R.from_int(3)
    two = R.from_int(2)
    for _ in range(64):
        if R.mul(e, e) == e:
            return tuple(e)
        e2 = R.mul(e, e)
        e = R.sub(R.mul(three, e2), R.mul(two, R.mul(e2, e)))
    raise MathIdentityError("idempotent lifting did not converge")


def _verify_idempotent_family(R, idems):
    acc = R.zero()
    for i, e in enumerate(idems):
        if R.is_zero(e) or R.mul(e, e) != tuple(e):
            raise MathIdentityError("family member is not a nonzero idempotent")
        acc = R.add(acc, e)
        for f in idems[i + 1:]:
            if not R.is_zero(R.mul(e, tuple(f))):
                raise MathIdentityError("idempotents are not orthogonal")
    if acc != R.one:
        raise MathIdentityError("idempotents do not sum to 1")


def _split_semisimple(R):
    """Primitive idempotents of a ring assumed reduced."""
    if R.dim == 1:
        return [R.one]
    if R.field.characteristic() > 0:
        return _split_semisimple_finite(R)
    return _split_semisimple_char0(R)


def _min_poly_of_element(R, x):
    powers = []
    acc = R.one
    for _ in range(R.dim + 1):
        powers.append(list(acc))
        acc = R.mul(acc, x)
    return linalg.min_poly_of_sequence(R.field, powers)


def _split_semisimple_finite(R):
    F = R.field
    q = F.cardinality()
    n = R.dim
    # Frobenius-fixed subalgebra: x with x^q = x; its dimension counts blocks
    cols = [R.pow_element(R._basis_vec(i), q) for i in range(n)]
    M = [[F.sub(cols[j][k], F.one() if j == k else F.zero()) for j in range(n)]
         for k in range(n)]
    fixed = linalg.nullspace(F, M)
    if len(fixed) == 1:
        return [R.one]
    # pick a fixed element that is not a scalar multiple of 1
    a = None
    for v in fixed:
        if linalg.rank(F, [list(R.one), list(v)]) == 2:
            a = tuple(v)
            break
    if a is None:
        raise MathIdentityError("fixed algebra of dimension >= 2 is all scalars")
    mu = _min_poly_of_element(R, a)
    roots = [x for x in F.elements() if F.is_zero(poly_eval(F, mu, x))]
    if len(roots) != len(mu) - 1:
        raise MathIdentityError("fixed element minimal polynomial did not split")
    roots.sort(key=F.sort_key)
    out = []
    for lam in roots:
        e = R.one
        for other in roots:
            if other == lam:
                continue
            scale = F.inv(F.sub(lam, other))
            factor = R.scal(scale, R.sub(a, R.from_field(other)))
            e = R.mul(e, factor)
        out.extend(_recurse_block(R, e))
    return out


def _split_semisimple_char0(R):
    F = R.field
    for i in range(R.dim):
        b = R._basis_vec(i)
        mu = _min_poly_of_element(R, b)
        if len(mu) <= 2:
            continue
        factors = partial_factor(F, mu)
        if len(factors) >= 2:
            idem_polys = crt_idempotent_polys(F, mu, [f.poly for f in factors])
            out = []
            for ep in idem_polys:
                e = _eval_poly_at_element(R, ep, b)
                out.extend(_recurse_block(R, e))
            return out
    # no split found: certify that R is a field or give up
    for i in range(R.dim):
        mu = _min_poly_of_element(R, R._basis_vec(i))
        if len(mu) - 1 == R.dim:
            factors = partial_factor(F, mu)
            if len(factors) == 1 and factors[0].certified:
                return [R.one]
    raise FactorizationIncompleteError(
        "cannot certify connectedness of a %d-dimensional block over %r"
        % (R.dim, F))


def _recurse_block(R, e):
    """Split the block eR further and inject its idempotents back into R."""
    if R.mul(e, e) != tuple(e) or R.is_zero(e):
        raise MathIdentityError("split produced a non-idempotent")
    if e == R.one:
        return [R.one]
    ring, project, inject = R.block(e)
    return [inject(f) for f in _split_semisimple(ring)]


def _eval_poly_at_element(R, poly, x):
    acc = R.zero()
    power = R.one
    for c in poly:
        acc = R.add(acc, R.scal(c, power))
        power = R.mul(power, x)
    return acc


# ---------------------------------------------------------------------------
# unit groups


class UnitGroup:
    """Unit group of a finite ring: full element list with orders; an
    independent generating basis is computed lazily on first access."""

    def __init__(self, ring, elements, orders):
        self.ring = ring
        self.elements = tuple(elements)
        self.orders = orders
        self.order = len(self.elements)
        self._basis = None

    @property
    def basis(self):
        if self._basis is None:
            self._basis = tuple(_abelian_basis(self.ring, list(self.elements),
                                               self.orders))
        return self._basis

    def unit_data(self, include_basis=False):
        from .abgroups import UnitData

        return UnitData(
            tuple((e, self.orders[e]) for e in self.elements),
            tuple(self.basis) if include_basis else (),
        )


def enumerate_units(R, cap=10**6):
    count = R.element_count()
    if count is None:
        raise NotEnumerableError("unit enumeration needs a finite base field")
    if count > cap:
        raise CapExceededError("|R| = %d exceeds cap %d" % (count, cap))
    units = sorted((v for v in R.elements() if R.is_unit(v)), key=R.sort_key)
    n_units = len(units)
    divisors = _sorted_divisors(n_units)
    orders = {}
    for u in units:
        for d in divisors:
            if R.pow_element(u, d) == R.one:
                orders[u] = d
                break
    return UnitGroup(R, units, orders)


def _sorted_divisors(n):
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _abelian_basis(R, units, orders):
    """Independent generators with orders for the finite abelian group R^x.

    Greedy generating set, then all multiplicative relations among the
    generators are enumerated and Smith-reduced; the canonical quotient
    generators map back to an independent basis."""
    n_units = len(units)
    if n_units == 1:
        return []
    gens = []
    subgroup = {R.one}
    while len(subgroup) < n_units:
        best = None
        for u in units:
            if u in subgroup:
                continue
            # quotient growth when adding u
            s = next(d for d in _sorted_divisors(orders[u])
                     if R.pow_element(u, d) in subgroup)
            key = (-s, orders[u], R.sort_key(u))
            if best is None or key < best[0]:
                best = (key, u, s)
        gens.append(best[1])
        subgroup = _extend_subgroup(R, subgroup, best[1], best[2])
    # relations: tuples (a_1..a_k) mod orders with prod g_i^{a_i} = 1
    gen_orders = [orders[g] for g in gens]
    rel_rows = []
    total = 1
    for o in gen_orders:
        total *= o
    if total > 4 * 10**6:
        raise CapExceededError("unit group relation search too large")
    for assign in itertools.product(*[range(o) for o in gen_orders]):
        acc = R.one
        for g, a in zip(gens, assign):
            acc = R.mul(acc, R.pow_element(g, a))
        if acc == R.one:
            rel_rows.append(list(assign))
    for i, o in enumerate(gen_orders):
        row = [0] * len(gens)
        row[i] = o
        rel_rows.append(row)
    group, _, lift = group_from_presentation(
        Presentation(len(gens), tuple(tuple(r) for r in rel_rows)))
    if group.order() != n_units:
        raise MathIdentityError("unit group basis does not have the right order")
    basis = []
    factors = list(group.torsion)
    for coeffs, order in zip(lift, factors):
        elem = R.one
        for c, g in zip(coeffs, gens):
            elem = R.mul(elem, _pow_signed(R, g, c, orders[g]))
        if R.pow_element(elem, order) != R.one:
            raise MathIdentityError("basis element order mismatch")
        basis.append((elem, order))
    return basis


def _pow_signed(R, g, c, order):
    return R.pow_element(g, c % order)


def _extend_subgroup(R, subgroup, x, quotient_order):
    """<subgroup, x> for abelian groups: cosets subgroup * x^k, k < s."""
    out = set(subgroup)
    power = R.one
    for _ in range(quotient_order - 1):
        power = R.mul(power, x)
        out.update(R.mul(h, power) for h in subgroup)
    return out


# ---------------------------------------------------------------------------
# sparse group algebra RG


class GroupAlgebra:
    """Arithmetic for finitely supported elements of RG; G may be infinite.

    Elements are dicts {group element tuple: nonzero ring element}."""

    def __init__(self, ring, group):
        self.ring = ring
        self.group = group

    def zero(self):
        return {}

    def one(self):
        return {self.group.identity(): self.ring.one}

    def monomial(self, r, g):
        if self.ring.is_zero(r):
            return {}
        return {self.group.reduce(g): tuple(r)}

    def scalar(self, r):
        return self.monomial(r, self.group.identity())

    def add(self, x, y):
        out = dict(x)
        for g, r in y.items():
            if g in out:
                s = self.ring.add(out[g], r)
                if self.ring.is_zero(s):
                    del out[g]
                else:
                    out[g] = s
            else:
                out[g] = r
        return out

    def neg(self, x):
        return {g: self.ring.neg(r) for g, r in x.items()}

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        out = {}
        for g, r in x.items():
            for h, s in y.items():
                gh = self.group.add(g, h)
                rs = self.ring.mul(r, s)
                if gh in out:
                    rs = self.ring.add(out[gh], rs)
                if self.ring.is_zero(rs):
                    out.pop(gh, None)
                else:
                    out[gh] = rs
        return out

    def eq(self, x, y):
        return x == y

    def is_zero(self, x):
        return not x

    def counit(self, x):
        """RG -> R sending every group element to 1."""
        acc = self.ring.zero()
        for r in x.values():
            acc = self.ring.add(acc, r)
        return acc

    def as_monomial(self, x):
        """(r, g) if x = r*g with a single term, else None."""
        if len(x) != 1:
            return None
        (g, r), = x.items()
        return r, g

    def monomial_is_unit(self, x):
        m = self.as_monomial(x)
        return m is not None and self.ring.is_unit(m[0])
