"""
Polyhedra in H-representation {z : A z ≥ c}.
"""
from typing import Optional, Sequence

import numpy as np

from .exceptions import SolverError


class Polyhedron:
    """
    Immutable polyhedron {z : A z ≥ c}.

    Intersections return new objects and never prune rows, so a
    polyhedron's row list is an audit trail of the constraints it absorbed.
    """

    __slots__ = ("_A", "_c")

    def __init__(self, A, c):
        A = np.array(A, dtype=float)
        c = np.array(c, dtype=float).reshape(-1)
        if A.ndim == 1 and c.size == 1:
            A = A.reshape(1, -1)
        if A.ndim != 2 or A.shape[0] != c.size:
            raise SolverError(f"Constraint matrix {A.shape} does not match right-hand side ({c.size},)")
        A.setflags(write=False)
        c.setflags(write=False)
        self._A = A
        self._c = c

    @classmethod
    def box(cls, lower: Sequence[float], upper: Sequence[float]) -> "Polyhedron":
        """{z : lower ≤ z ≤ upper}, lower bounds first."""
        lower = np.asarray(lower, dtype=float)
        upper = np.asarray(upper, dtype=float)
        if lower.shape != upper.shape:
            raise SolverError("Box bounds must have the same shape")
        eye = np.eye(lower.size)
        return cls(np.vstack([eye, -eye]), np.concatenate([lower, -upper]))

    @classmethod
    def whole_space(cls, dim: int) -> "Polyhedron":
        return cls(np.zeros((0, dim)), np.zeros(0))

    @property
    def A(self) -> np.ndarray:
        return self._A

    @property
    def c(self) -> np.ndarray:
        return self._c

    @property
    def dim(self) -> int:
        return self._A.shape[1]

    @property
    def n_rows(self) -> int:
        return self._A.shape[0]

    def slack(self, z: Sequence[float]) -> np.ndarray:
        """A z − c."""
        return self._A @ np.asarray(z, dtype=float) - self._c

    def contains(self, z: Sequence[float], tol: float = 1e-8) -> bool:
        """A z ≥ c − tol·(1 + |A_i|) row by row."""
        z = np.asarray(z, dtype=float)
        if z.size != self.dim:
            raise SolverError(f"Point of dimension {z.size} tested against a {self.dim}-dimensional polyhedron")
        if self.n_rows == 0:
            return True
        scale = 1.0 + np.linalg.norm(self._A, axis=1)
        return bool(np.all(self.slack(z) >= -tol * scale))

    def violation(self, z: Sequence[float]) -> float:
        """Largest (c_i − A_i z)/(1 + |A_i||z|∞ + |c_i|); 0 when z is inside."""
        z = np.asarray(z, dtype=float)
        if self.n_rows == 0:
            return 0.0
        size = float(np.max(np.abs(z), initial=0.0))
        scale = 1.0 + np.linalg.norm(self._A, axis=1) * size + np.abs(self._c)
        return max(0.0, float(np.max(-self.slack(z) / scale)))

    def intersect(self, psi: Sequence[float], nu: float) -> "Polyhedron":
        """Append the halfspace {z : ψ·z ≥ ν}."""
        psi = np.asarray(psi, dtype=float).reshape(-1)
        if psi.size != self.dim:
            raise SolverError(f"Halfspace normal of length {psi.size} for dimension {self.dim}")
        return Polyhedron(np.vstack([self._A, psi]), np.append(self._c, float(nu)))

    def meet(self, other: "Polyhedron") -> "Polyhedron":
        """Intersection with another polyhedron of the same dimension."""
        if other.dim != self.dim:
            raise SolverError(f"Cannot intersect dimensions {self.dim} and {other.dim}")
        return Polyhedron(np.vstack([self._A, other.A]), np.concatenate([self._c, other.c]))

    def embed(self, total_dim: int, offset: int = 0) -> "Polyhedron":
        """Lift into R^total_dim, acting on coordinates offset..offset+dim−1."""
        if offset < 0 or offset + self.dim > total_dim:
            raise SolverError(f"Cannot embed dimension {self.dim} at offset {offset} into {total_dim}")
        A = np.zeros((self.n_rows, total_dim))
        A[:, offset:offset + self.dim] = self._A
        return Polyhedron(A, self._c)

    def with_rhs(self, index: int, value: float) -> "Polyhedron":
        """Copy with c[index] replaced."""
        c = self._c.copy()
        c[index] = value
        return Polyhedron(self._A, c)

    def row(self, index: int) -> tuple:
        return self._A[index].copy(), float(self._c[index])

    def to_dict(self, precision: Optional[int] = None) -> dict:
        A, c = self._A, self._c
        if precision is not None:
            A, c = np.round(A, precision), np.round(c, precision)
        return {"A": A.tolist(), "c": c.tolist()}

    def __repr__(self) -> str:
        return f"Polyhedron(dim={self.dim}, rows={self.n_rows})"
