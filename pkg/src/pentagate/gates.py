"""Gate matrix constructors.

Single-qubit gates, the two-qubit standard gates, the commuting XX/YY/ZZ
exponentials, the three-parameter A gate, the B gate, the two-site
Heisenberg evolution operator, and permutation fusion operators built from
finite-group multiplication tables.

Conventions:

  rotation(axis, theta) = cos(theta/2) I - i sin(theta/2) sigma_axis
  xx(c) = exp(i c/2 sigma_x (x) sigma_x), same pattern for yy and zz
  a_gate(c1, c2, c3) = zz(c3) yy(c2) xx(c1)     (the factors commute)
  heisenberg_evolution(tx, ty, tz) = prod_a exp(i t_a sigma_a (x) sigma_a)

Heisenberg angles are the dimensionless products t_a = J_a t / hbar with
hbar = 1; coupling and time never enter separately. Both a_gate and
heisenberg_evolution are 4*pi-periodic in each parameter, and the two
families coincide under parameter doubling:

  heisenberg_evolution(tx, ty, tz) == a_gate(2 tx, 2 ty, 2 tz)
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidGroupError, UnknownGateError
from .linalg import kron

FOUR_PI = 4.0 * math.pi

_SQRT2_INV = 1.0 / math.sqrt(2.0)

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def pauli(axis: str) -> np.ndarray:
    """Pauli matrix for axis 'x', 'y' or 'z'."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}, expected 'x', 'y' or 'z'") from None


def rotation(axis: str, theta: float) -> np.ndarray:
    """Single-qubit rotation exp(-i theta/2 sigma_axis)."""
    half = 0.5 * float(theta)
    return math.cos(half) * np.eye(2, dtype=np.complex128) - 1j * math.sin(half) * pauli(axis)


def standard_gate(name: str) -> np.ndarray:
    """One of the fixed named gates H, S, CNOT, SWAP."""
    if name == "H":
        return _SQRT2_INV * np.array([[1, 1], [1, -1]], dtype=np.complex128)
    if name == "S":
        return np.array([[1, 0], [0, 1j]], dtype=np.complex128)
    if name == "CNOT":
        return np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
            dtype=np.complex128,
        )
    if name == "SWAP":
        return np.array(
            [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
            dtype=np.complex128,
        )
    raise UnknownGateError(f"unknown standard gate {name!r}")


def _two_site_exponential(axis: str, theta: float) -> np.ndarray:
    """exp(i theta sigma_axis (x) sigma_axis), closed form via (s(x)s)^2 = I."""
    pp = kron(pauli(axis), pauli(axis))
    return math.cos(theta) * np.eye(4, dtype=np.complex128) + 1j * math.sin(theta) * pp


def xx(c1: float) -> np.ndarray:
    """exp(i c1/2 sigma_x (x) sigma_x)."""
    return _two_site_exponential("x", 0.5 * float(c1))


def yy(c2: float) -> np.ndarray:
    """exp(i c2/2 sigma_y (x) sigma_y)."""
    return _two_site_exponential("y", 0.5 * float(c2))


def zz(c3: float) -> np.ndarray:
    """exp(i c3/2 sigma_z (x) sigma_z) = diag(e^{ic/2}, e^{-ic/2}, e^{-ic/2}, e^{ic/2})."""
    return _two_site_exponential("z", 0.5 * float(c3))


def a_gate(c1: float, c2: float, c3: float) -> np.ndarray:
    """The three-parameter A gate, zz(c3) yy(c2) xx(c1), in closed form.

    Each parameter triple labels a local-equivalence class of two-qubit
    gates; the matrix is 4*pi-periodic in every parameter.
    """
    half_diff = 0.5 * (float(c1) - float(c2))
    half_sum = 0.5 * (float(c1) + float(c2))
    ep = np.exp(0.5j * float(c3))
    em = np.exp(-0.5j * float(c3))
    cd, sd = math.cos(half_diff), math.sin(half_diff)
    cs, ss = math.cos(half_sum), math.sin(half_sum)
    return np.array(
        [
            [ep * cd, 0, 0, 1j * ep * sd],
            [0, em * cs, 1j * em * ss, 0],
            [0, 1j * em * ss, em * cs, 0],
            [1j * ep * sd, 0, 0, ep * cd],
        ],
        dtype=np.complex128,
    )


def b_gate() -> np.ndarray:
    """The fixed two-qubit B gate, xx(pi/2) yy(pi/4)."""
    return xx(0.5 * math.pi) @ yy(0.25 * math.pi)


def heisenberg_evolution(theta_x: float, theta_y: float, theta_z: float) -> np.ndarray:
    """Two-site Heisenberg evolution operator.

    Product of the three commuting component exponentials
    exp(i theta_a sigma_a (x) sigma_a); equals a_gate(2 tx, 2 ty, 2 tz).
    """
    return (
        _two_site_exponential("z", float(theta_z))
        @ _two_site_exponential("y", float(theta_y))
        @ _two_site_exponential("x", float(theta_x))
    )


@dataclass(frozen=True)
class AGateParams:
    """Parameter triple (c1, c2, c3) of the A gate, in radians."""

    c1: float
    c2: float
    c3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    def canonical(self) -> "AGateParams":
        """Representative with each coordinate reduced mod 4*pi into [0, 4*pi)."""
        return AGateParams(self.c1 % FOUR_PI, self.c2 % FOUR_PI, self.c3 % FOUR_PI)


@dataclass(frozen=True)
class HeisenbergParams:
    """Angle triple (theta_x, theta_y, theta_z) with theta_a = J_a t / hbar."""

    theta_x: float
    theta_y: float
    theta_z: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.theta_x, self.theta_y, self.theta_z)

    def canonical(self) -> "HeisenbergParams":
        """Representative with each coordinate reduced mod 4*pi into [0, 4*pi)."""
        return HeisenbergParams(
            self.theta_x % FOUR_PI, self.theta_y % FOUR_PI, self.theta_z % FOUR_PI
        )


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table of a finite group.

    ``table[i][j]`` is the index of the product g_i * g_j. Validation is
    eager and checks the full group axioms, including all order**3
    associativity triples, so construction is O(order^3); intended for
    small groups.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity_index: int

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise InvalidGroupError("group order must be positive")
        t = self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidGroupError(f"table must be {n}x{n}")
        full = set(range(n))
        for i, row in enumerate(t):
            if set(row) != full:
                raise InvalidGroupError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if {row[j] for row in t} != full:
                raise InvalidGroupError(f"column {j} is not a permutation of 0..{n - 1}")
        e = self.identity_index
        if not 0 <= e < n:
            raise InvalidGroupError(f"identity index {e} out of range")
        for g in range(n):
            if t[e][g] != g or t[g][e] != g:
                raise InvalidGroupError(f"element {e} is not a two-sided identity")
        for a in range(n):
            for b in range(n):
                tab = t[a][b]
                for c in range(n):
                    if t[tab][c] != t[a][t[b][c]]:
                        raise InvalidGroupError(
                            f"associativity fails at triple ({a}, {b}, {c})"
                        )

    @classmethod
    def cyclic(cls, n: int) -> "CayleyTable":
        """The cyclic group Z_n with addition mod n."""
        if n < 1:
            raise InvalidGroupError("cyclic group order must be positive")
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        return cls(n, table, 0)

    @classmethod
    def trivial(cls) -> "CayleyTable":
        return cls.cyclic(1)

    @classmethod
    def direct_product(cls, g: "CayleyTable", h: "CayleyTable") -> "CayleyTable":
        """Direct product with pair (i, j) indexed as i * h.order + j."""
        n = g.order * h.order
        table = []
        for i1 in range(g.order):
            for j1 in range(h.order):
                row = []
                for i2 in range(g.order):
                    for j2 in range(h.order):
                        row.append(g.table[i1][i2] * h.order + h.table[j1][j2])
                table.append(tuple(row))
        return cls(n, tuple(table), g.identity_index * h.order + h.identity_index)

    @classmethod
    def symmetric(cls, n: int) -> "CayleyTable":
        """The symmetric group S_n; elements are permutation tuples in lex order."""
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = []
        for p in perms:
            # (p o q)(x) = p[q[x]]
            table.append(tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms))
        return cls(len(perms), tuple(table), index[tuple(range(n))])


def group_algebra_fusion(g: CayleyTable) -> np.ndarray:
    """Permutation fusion operator of a finite group.

    Acts on basis vectors of C^n (x) C^n by e_g (x) e_h -> e_g (x) e_{g h},
    i.e. the composite of the diagonal coproduct g -> g (x) g with the group
    product. Always an exact pentagon solution; for Z_2 this is CNOT.
    """
    n = g.order
    mat = np.zeros((n * n, n * n), dtype=np.complex128)
    for a in range(n):
        for b in range(n):
            mat[a * n + g.table[a][b], a * n + b] = 1.0
    return mat


# Gate-name registry shared with the circuit JSON schema.

_FIXED_1Q = {
    "I": lambda: np.eye(2, dtype=np.complex128),
    "X": lambda: pauli("x"),
    "Y": lambda: pauli("y"),
    "Z": lambda: pauli("z"),
    "H": lambda: standard_gate("H"),
    "S": lambda: standard_gate("S"),
}
_ROTATIONS = {"RX": "x", "RY": "y", "RZ": "z"}
_FIXED_2Q = {
    "CNOT": lambda: standard_gate("CNOT"),
    "SWAP": lambda: standard_gate("SWAP"),
    "B": b_gate,
}
_PARAM_2Q = {"XX": xx, "YY": yy, "ZZ": zz}

KNOWN_GATES = (
    tuple(_FIXED_1Q) + tuple(_ROTATIONS) + tuple(_FIXED_2Q) + tuple(_PARAM_2Q) + ("A", "HEIS")
)


def gate_arity(name: str) -> int:
    """Number of wires a named gate acts on."""
    if name in _FIXED_1Q or name in _ROTATIONS:
        return 1
    if name in _FIXED_2Q or name in _PARAM_2Q or name in ("A", "HEIS"):
        return 2
    raise UnknownGateError(f"unknown gate name {name!r}")


def parameter_count(name: str) -> int:
    """Number of real parameters a named gate takes."""
    if name in _ROTATIONS or name in _PARAM_2Q:
        return 1
    if name in ("A", "HEIS"):
        return 3
    if name in _FIXED_1Q or name in _FIXED_2Q:
        return 0
    raise UnknownGateError(f"unknown gate name {name!r}")


def gate_matrix(name: str, params=()) -> np.ndarray:
    """Resolve a gate name plus parameters to its unitary matrix."""
    expected = parameter_count(name)
    params = tuple(float(p) for p in params)
    if len(params) != expected:
        raise ValueError(
            f"gate {name!r} takes {expected} parameter(s), got {len(params)}"
        )
    if name in _FIXED_1Q:
        return _FIXED_1Q[name]()
    if name in _ROTATIONS:
        return rotation(_ROTATIONS[name], params[0])
    if name in _FIXED_2Q:
        return _FIXED_2Q[name]()
    if name in _PARAM_2Q:
        return _PARAM_2Q[name](params[0])
    if name == "A":
        return a_gate(*params)
    return heisenberg_evolution(*params)
