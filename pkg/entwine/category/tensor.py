from __future__ import annotations

from dataclasses import dataclass

from entwine.errors import EntwineError
from entwine.linalg import Matrix, hstack, kron, quotient_projection


@dataclass(eq=False)
class TensorOverSub:
    """
    M (x)_E N as the quotient of the direct sum over Z of M(Z) (x) N(Z) by
    the relations M(e)(m) (x) n - m (x) N(e)(n), e in E.

    Summands are laid out in object order; ``offsets[Z]`` is where the
    summand of Z starts.
    """
    left: object
    right: object
    offsets: dict
    sizes: dict
    ambient_dim: int
    relations: Matrix
    projection: Matrix
    section: Matrix

    @property
    def field(self):
        return self.left.field

    @property
    def dim(self):
        return self.projection.rows

    def embed(self, Z):
        """Inclusion of the summand M(Z) (x) N(Z) into the direct sum"""
        out = Matrix.zeros(self.field, self.ambient_dim, self.sizes[Z])
        off = self.offsets[Z]
        for j in range(self.sizes[Z]):
            out.data[off + j, j] = self.field.one
        return out

    def restrict(self, Z):
        """Coordinate projection of the direct sum onto the summand of Z"""
        return self.embed(Z).T

    def of(self, Z, vectors):
        """Classes of elements of M(Z) (x) N(Z)"""
        return self.projection @ self.embed(Z) @ vectors

    def to_string(self):
        return f'TensorOverSub[{self.left.name} (x) {self.right.name}, dim = {self.dim}]'


def tensor_over_sub(m, n):
    """
    M (x)_E N for a right module ``m`` and a left module ``n`` over the same
    category E (for a subcategory use its ``category`` and the restricted
    modules).
    """
    if m.base is not n.base:
        raise EntwineError(f'{m.name} and {n.name} are modules over different categories')
    e = m.base
    field = e.field
    offsets, sizes = {}, {}
    total = 0
    for Z in e.objects:
        offsets[Z] = total
        sizes[Z] = m.dim(Z) * n.dim(Z)
        total += sizes[Z]

    def embed(Z):
        out = Matrix.zeros(field, total, sizes[Z])
        for j in range(sizes[Z]):
            out.data[offsets[Z] + j, j] = field.one
        return out

    columns = []
    for X, Y in e.pairs():
        for basis_e in e.basis(X, Y):
            # from M(Y) (x) N(X)
            left = kron(m.along(basis_e, X, Y), n.eye(X))
            right = kron(m.eye(Y), n.along(basis_e, X, Y))
            columns.append(embed(X) @ left - embed(Y) @ right)
    relations = hstack(field, columns, total)
    projection, section = quotient_projection(total, relations)
    return TensorOverSub(m, n, offsets, sizes, total, relations, projection, section)
