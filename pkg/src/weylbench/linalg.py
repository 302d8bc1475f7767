"""Dense exact linear algebra over an ExactField (desk-scale matrices).

Matrices are lists of row lists; vectors are lists.  Everything is pure.
"""

from __future__ import annotations

from .errors import SingularMatrixError


def identity(F, n):
    return [[F.one() if i == j else F.zero() for j in range(n)] for i in range(n)]


def zeros(F, r, c):
    return [[F.zero() for _ in range(c)] for _ in range(r)]


def mat_mul(F, A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = zeros(F, n, m)
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if F.is_zero(a):
                continue
            Bt = B[t]
            Oi = out[i]
            for j in range(m):
                Oi[j] = F.add(Oi[j], F.mul(a, Bt[j]))
    return out


def mat_vec(F, A, v):
    return [
        _dot(F, row, v)
        for row in A
    ]


def _dot(F, row, v):
    acc = F.zero()
    for a, b in zip(row, v):
        if not (F.is_zero(a) or F.is_zero(b)):
            acc = F.add(acc, F.mul(a, b))
    return acc


def mat_eq(F, A, B):
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if not F.eq(a, b):
                return False
    return True


def rref(F, A):
    """Reduced row echelon form; returns (R, pivot column list)."""
    R = [row[:] for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not F.is_zero(R[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(rows):
            if i != r and not F.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(F, A):
    return len(rref(F, A)[1])


def det(F, A):
    n = len(A)
    M = [row[:] for row in A]
    sign = False
    d = F.one()
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not F.is_zero(M[i][c]):
                pivot = i
                break
        if pivot is None:
            return F.zero()
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            sign = not sign
        d = F.mul(d, M[c][c])
        inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if F.is_zero(M[i][c]):
                continue
            f = F.mul(M[i][c], inv)
            M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[c])]
    return F.neg(d) if sign else d


def inv(F, A):
    n = len(A)
    M = [row[:] + IdRow for row, IdRow in zip(A, identity(F, n))]
    R, pivots = rref(F, M)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in R]


def solve(F, A, b):
    """One solution of A x = b, or raise SingularMatrixError if inconsistent."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [A[i][:] + [b[i]] for i in range(rows)]
    R, pivots = rref(F, M)
    for i in range(len(pivots), rows):
        if not F.is_zero(R[i][cols]):
            raise SingularMatrixError("inconsistent linear system")
    x = [F.zero()] * cols
    for r, c in enumerate(pivots):
        if c == cols:
            raise SingularMatrixError("inconsistent linear system")
        x[c] = R[r][cols]
    return x


def nullspace(F, A):
    """Basis of the right kernel of A."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    R, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero()] * cols
        v[fc] = F.one()
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis


def mat_pow(F, A, k):
    n = len(A)
    out = identity(F, n)
    B = [row[:] for row in A]
    while k > 0:
        if k & 1:
            out = mat_mul(F, out, B)
        B = mat_mul(F, B, B)
        k >>= 1
    return out


def first_dependence(F, vectors):
    """Smallest k with v_k in span(v_0..v_{k-1}), plus combination coeffs.

    Returns (k, coeffs) with v_k = sum coeffs[i] * v_i, or (None, None) if the
    whole list is independent.
    """
    basis = []   # echelon rows
    ops = []     # ops[idx]: basis[idx] as a combination of inputs v_0..v_?
    leads = []
    for k, v in enumerate(vectors):
        cur = list(v)
        expr = [F.zero()] * k   # running combination subtracted from v_k
        for idx in range(len(basis)):
            c = cur[leads[idx]]
            if F.is_zero(c):
                continue
            row, op = basis[idx], ops[idx]
            cur = [F.sub(x, F.mul(c, y)) for x, y in zip(cur, row)]
            for i in range(len(op)):
                expr[i] = F.add(expr[i], F.mul(c, op[i]))
        lead = next((i for i, x in enumerate(cur) if not F.is_zero(x)), None)
        if lead is None:
            return k, expr
        invc = F.inv(cur[lead])
        basis.append([F.mul(invc, x) for x in cur])
        ops.append([F.neg(F.mul(invc, e)) for e in expr] + [invc])
        leads.append(lead)
    return None, None


def min_poly_of_sequence(F, seq):
    """Monic minimal polynomial coefficients (low first) of a power sequence.

    seq yields 1, x, x^2, ... as coordinate vectors; stops at first dependence.
    """
    vectors = []
    for v in seq:
        vectors.append(list(v))
        k, coeffs = first_dependence(F, vectors)
        if k is not None:
            return [F.neg(c) for c in coeffs] + [F.one()]
    raise SingularMatrixError("sequence terminated without dependence")
