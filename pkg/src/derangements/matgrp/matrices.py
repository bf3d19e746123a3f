"""Matrices over small finite fields and the sesquilinear/quadratic forms
they preserve.

Row-vector convention throughout: vectors act on the right, v -> v @ M, so
composing matrix actions reads left to right, matching how the induced
permutations compose.  Forms:

  unitary     f(u, v) = sum_i,j u_i J_ij conj(v_j),   conj = x -> x^q0
  symplectic  f(u, v) = sum_i,j u_i J_ij v_j,         J alternating
  quadratic   Q(v)    = sum_{i<=j} C_ij v_i v_j, polar form B = C + C^T

The standard Gram matrices are antidiagonal (hyperbolic pairs paired
outside-in), with the anisotropic part of an elliptic form in the middle.
"""

from __future__ import annotations

from .fields import Field, make_field


class UnsupportedConstruction(ValueError):
    pass


class Mat:
    __slots__ = ("field", "n", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)

    @staticmethod
    def identity(field, n):
        return Mat(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __mul__(self, other):
        F = self.field
        add, mul = F.add, F.mul
        brows = other.rows
        out = []
        for row in self.rows:
            acc = [0] * other.n
            for k, a in enumerate(row):
                if a:
                    brow = brows[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] = add(acc[j], mul(a, b))
            out.append(acc)
        return Mat(F, out)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows and self.field == other.field

    def __hash__(self):
        return hash(self.rows)

    def apply(self, v):
        """Row vector image v @ M."""
        F = self.field
        add, mul = F.add, F.mul
        acc = [0] * self.n
        for i, a in enumerate(v):
            if a:
                row = self.rows[i]
                for j, b in enumerate(row):
                    if b:
                        acc[j] = add(acc[j], mul(a, b))
        return tuple(acc)

    def transpose(self):
        return Mat(self.field, list(zip(*self.rows)))

    def conj(self, times):
        """Entrywise Frobenius x -> x^(p^times)."""
        F = self.field
        return Mat(F, [[F.frob(a, times) for a in row] for row in self.rows])

    def inv(self):
        F = self.field
        n = self.n
        aug = [list(self.rows[i]) + [1 if j == i else 0 for j in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            s = F.inv(aug[col][col])
            aug[col] = [F.mul(s, x) for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[r], aug[col])]
        return Mat(F, [row[n:] for row in aug])

    def det(self):
        F = self.field
        n = self.n
        m = [list(r) for r in self.rows]
        d = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = F.neg(d)
            d = F.mul(d, m[col][col])
            s = F.inv(m[col][col])
            for r in range(col + 1, n):
                if m[r][col]:
                    c = F.mul(s, m[r][col])
                    m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[col])]
        return d

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = Mat.identity(self.field, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(a == (1 if i == j else 0)
                   for i, row in enumerate(self.rows) for j, a in enumerate(row))

    def order(self, cap=10**6):
        acc = self
        for k in range(1, cap + 1):
            if acc.is_identity():
                return k
            acc = acc * self
        raise RuntimeError("order cap exceeded")

    def rank(self):
        F = self.field
        m = [list(r) for r in self.rows]
        rank = 0
        for col in range(len(m[0])):
            piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            s = F.inv(m[rank][col])
            m[rank] = [F.mul(s, x) for x in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col]:
                    c = m[r][col]
                    m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[rank])]
            rank += 1
        return rank

    def __repr__(self):
        return f"Mat({self.field}, {self.rows})"


class FormSpec:
    """A nondegenerate form on GF(q)^n of unitary, symplectic or quadratic
    kind.  For the unitary kind the field is GF(q0^2) and conjugation is
    x -> x^q0."""

    def __init__(self, kind, field, gram=None, quad=None, sign=None):
        self.kind = kind
        self.field = field
        self.gram = gram            # Mat for unitary/symplectic, polar form for quadratic
        self.quad = quad            # upper-triangular Mat for quadratic kind
        self.sign = sign            # "+", "-", "o" for quadratic kind
        if kind == "unitary":
            assert field.f % 2 == 0
            self.half = field.f // 2
        else:
            self.half = None

    def conj(self, a):
        return self.field.frob(a, self.half)

    def value(self, u, v):
        """The (sesqui)bilinear value f(u, v); polar form for quadratic."""
        F = self.field
        g = self.gram.rows
        acc = 0
        for i, ui in enumerate(u):
            if ui:
                row = g[i]
                for j, vj in enumerate(v):
                    if vj and row[j]:
                        w = self.conj(vj) if self.kind == "unitary" else vj
                        acc = F.add(acc, F.mul(ui, F.mul(row[j], w)))
        return acc

    def q_value(self, v):
        """Quadratic value Q(v) (quadratic kind only)."""
        F = self.field
        c = self.quad.rows
        acc = 0
        for i, vi in enumerate(v):
            if vi:
                for j in range(i, len(v)):
                    if v[j] and c[i][j]:
                        acc = F.add(acc, F.mul(c[i][j], F.mul(vi, v[j])))
        return acc

    def preserves(self, m: Mat) -> bool:
        F = self.field
        n = m.n
        basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        imgs = [m.apply(e) for e in basis]
        if self.kind == "quadratic":
            for i in range(n):
                if self.q_value(imgs[i]) != self.q_value(basis[i]):
                    return False
        for i in range(n):
            for j in range(n):
                if self.value(imgs[i], imgs[j]) != self.value(basis[i], basis[j]):
                    return False
        return True

    def is_isotropic(self, v):
        if self.kind == "quadratic":
            return self.q_value(v) == 0
        return self.value(v, v) == 0

    def radical_free(self):
        return self.gram.det() != 0


def _least_irreducible_c(F):
    """Least c with x^2 + x + c irreducible over F."""
    for c in range(1, F.q):
        # irreducible iff no root in F
        if all(F.add(F.add(F.mul(t, t), t), c) != 0 for t in F.elements()):
            return c
    raise AssertionError


def standard_form(kind, field, n, sign=None) -> FormSpec:
    """The fixed standard form of each kind in the antidiagonal layout."""
    F = field
    if kind == "unitary":
        gram = Mat(F, [[1 if j == n - 1 - i else 0 for j in range(n)] for i in range(n)])
        return FormSpec("unitary", F, gram=gram)
    if kind == "symplectic":
        assert n % 2 == 0
        rows = [[0] * n for _ in range(n)]
        for i in range(n // 2):
            rows[i][n - 1 - i] = 1
            rows[n - 1 - i][i] = F.neg(1)
        return FormSpec("symplectic", F, gram=Mat(F, rows))
    if kind == "quadratic":
        quad = [[0] * n for _ in range(n)]
        if sign == "+":
            assert n % 2 == 0
            for i in range(n // 2):
                quad[i][n - 1 - i] = 1
        elif sign == "-":
            assert n % 2 == 0
            m = n // 2
            for i in range(m - 1):
                quad[i][n - 1 - i] = 1
            c = _least_irreducible_c(F)
            quad[m - 1][m - 1] = 1
            quad[m - 1][m] = 1
            quad[m][m] = c
        elif sign == "o":
            assert n % 2 == 1
            m = (n - 1) // 2
            for i in range(m):
                quad[i][n - 1 - i] = 1
            quad[m][m] = 1
        else:
            raise UnsupportedConstruction(f"unknown quadratic sign {sign!r}")
        quadm = Mat(F, quad)
        polar = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i < j:
                    polar[i][j] = quad[i][j]
                elif i > j:
                    polar[i][j] = quad[j][i]
                else:
                    polar[i][j] = F.add(quad[i][i], quad[i][i])  # 2*C_ii
        return FormSpec("quadratic", F, gram=Mat(F, polar), quad=quadm, sign=sign)
    raise UnsupportedConstruction(f"unknown form kind {kind!r}")


def gram_of(form: FormSpec, basis) -> Mat:
    """Gram matrix of `form` restricted to the given basis vectors."""
    F = form.field
    return Mat(F, [[form.value(u, v) for v in basis] for u in basis])
