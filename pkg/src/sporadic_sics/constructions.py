"""The sporadic SICs (qubit tetrahedra, Hesse, Hoggar) and the qutrit MUBs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import qmath
from .qmath import get_tol

QUBIT_PLUS_BLOCH = np.array(
    [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
) / np.sqrt(3)

HOGGAR_FIDUCIAL = np.array([-1 + 2j, 1, 1, 1, 1, 1, 1, 1], dtype=complex)

# Lines of AG(2,3) on points 1..9 laid out row-major; one row per parallel class.
AFFINE_LINES = (
    ("123", "456", "789"),
    ("147", "258", "369"),
    ("159", "267", "348"),
    ("168", "249", "357"),
)

SIC_LABELS = ("qubit-plus", "qubit-minus", "hesse", "hoggar")

# Exponents (a, b) of X^a Z^b mapped to the Hermitian representative.
_PAULI_REP = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


class ConstructionError(RuntimeError):
    """A construction failed its own defining check."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _ket_to_pairs(ket) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in ket]


def _pairs_to_ket(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs])


@dataclass(frozen=True)
class SicSet:
    """d^2 unit kets with pairwise squared overlap 1/(d+1)."""

    dim: int
    label: str
    kets: np.ndarray
    element_labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        kets = _frozen(self.kets)
        if kets.shape != (self.dim**2, self.dim):
            raise ValueError(f"expected {self.dim**2} kets of length {self.dim}, got shape {kets.shape}")
        object.__setattr__(self, "kets", kets)
        if not self.element_labels:
            object.__setattr__(self, "element_labels", tuple(str(i + 1) for i in range(self.dim**2)))

    def __len__(self) -> int:
        return len(self.kets)

    @property
    def projectors(self) -> np.ndarray:
        """Array of shape (d^2, d, d) holding |pi_i><pi_i|."""
        return np.einsum("ia,ib->iab", self.kets, self.kets.conj())

    def gram(self) -> np.ndarray:
        """Squared overlaps |<pi_i|pi_j>|^2."""
        return np.abs(self.kets.conj() @ self.kets.T) ** 2

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "label": self.label,
            "element_labels": list(self.element_labels),
            "kets": [_ket_to_pairs(k) for k in self.kets],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SicSet":
        kets = np.array([_pairs_to_ket(k) for k in data["kets"]])
        return cls(int(data["dim"]), data["label"], kets, tuple(data.get("element_labels", ())))


@dataclass(frozen=True)
class VerificationReport:
    label: str
    dim: int
    max_overlap_deviation: float
    max_identity_deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_overlap_deviation < self.tol and self.max_identity_deviation < self.tol

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "dim": self.dim,
            "max_overlap_deviation": self.max_overlap_deviation,
            "max_identity_deviation": self.max_identity_deviation,
            "tol": self.tol,
            "passed": self.passed,
        }


def verify_sic(sic: SicSet, tol: float | None = None) -> VerificationReport:
    """Check equiangularity and the resolution of identity sum_i Pi_i / d = I."""
    d = sic.dim
    target = (d * np.eye(d * d) + 1) / (d + 1)
    overlap_dev = float(np.max(np.abs(sic.gram() - target)))
    identity_dev = float(np.max(np.abs(sic.projectors.sum(axis=0) / d - np.eye(d))))
    return VerificationReport(sic.label, d, overlap_dev, identity_dev, get_tol(tol))


def _checked(sic: SicSet, tol: float | None) -> SicSet:
    report = verify_sic(sic, tol)
    if not report.passed:
        raise ConstructionError(
            f"{sic.label} SIC failed verification: overlap deviation {report.max_overlap_deviation:.3e}, "
            f"identity deviation {report.max_identity_deviation:.3e}"
        )
    return sic


def build_qubit_sic(orientation: str = "plus", tol: float | None = None) -> SicSet:
    """Tetrahedral qubit SIC.

    The ``"plus"`` tetrahedron has Bloch vectors (1,1,1), (1,-1,-1), (-1,1,-1),
    (-1,-1,1) over sqrt(3); ``"minus"`` is its antipodal twin, so the i-th
    elements of the two sets are orthogonal.
    """
    if orientation not in ("plus", "minus"):
        raise ValueError(f"orientation must be 'plus' or 'minus', got {orientation!r}")
    sign = 1.0 if orientation == "plus" else -1.0
    kets = []
    for n in sign * QUBIT_PLUS_BLOCH:
        vals, vecs = np.linalg.eigh(qmath.bloch_to_operator(n))
        kets.append(_fix_phase(vecs[:, -1]))
    return _checked(SicSet(2, f"qubit-{orientation}", np.array(kets)), tol)


def build_hesse_sic(tol: float | None = None) -> SicSet:
    """Nine qutrit kets read column by column from the Hesse matrix."""
    w = np.exp(2j * np.pi / 3)
    m = np.array(
        [
            [0, -1, 1, 0, -1, 1, 0, -1, 1],
            [1, 0, -1, w, 0, -w, w**2, 0, -(w**2)],
            [-1, 1, 0, -(w**2), w**2, 0, -w, w, 0],
        ],
        dtype=complex,
    ) / np.sqrt(2)
    return _checked(SicSet(3, "hesse", m.T), tol)


def pauli_elements() -> list[tuple[int, ...]]:
    """All 64 exponent tuples (a1, b1, a2, b2, a3, b3) in lexicographic order."""
    return list(itertools.product((0, 1), repeat=6))


def pauli_label(element: tuple[int, ...]) -> str:
    """Hermitian-representative label, e.g. (1,0,1,1,0,1) -> 'XYZ'."""
    return "".join(_PAULI_REP[(element[2 * k], element[2 * k + 1])] for k in range(len(element) // 2))


def pauli_element_operator(element: tuple[int, ...]) -> np.ndarray:
    return qmath.pauli_string(pauli_label(element))


def three_qubit_pauli_group() -> list[np.ndarray]:
    """The 64 operators P1 (x) P2 (x) P3 with P_k in {I, X, Y, Z}, phases dropped."""
    return [pauli_element_operator(e) for e in pauli_elements()]


def build_hoggar_sic(tol: float | None = None) -> SicSet:
    """Orbit of the Hoggar fiducial under the three-qubit Pauli group.

    Kets are indexed by Pauli exponent tuple in lexicographic order, so ket 0
    is the normalized fiducial itself.

    Raises:
        ConstructionError: if the orbit is not equiangular within tolerance.
    """
    fiducial = HOGGAR_FIDUCIAL / np.sqrt(12)
    elements = pauli_elements()
    kets = np.array([pauli_element_operator(e) @ fiducial for e in elements])
    return _checked(SicSet(8, "hoggar", kets, tuple(pauli_label(e) for e in elements)), tol)


def build_sic(label: str, tol: float | None = None) -> SicSet:
    if label == "qubit-plus":
        return build_qubit_sic("plus", tol)
    if label == "qubit-minus":
        return build_qubit_sic("minus", tol)
    if label == "hesse":
        return build_hesse_sic(tol)
    if label == "hoggar":
        return build_hoggar_sic(tol)
    raise ValueError(f"unknown SIC type {label!r}; choose from {', '.join(SIC_LABELS)}")


def _fix_phase(ket: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate the global phase so the first nonzero entry is real positive."""
    ket = np.asarray(ket, dtype=complex)
    first = ket[np.argmax(np.abs(ket) > tol)]
    return ket * (abs(first) / first)


@dataclass(frozen=True)
class MubSet:
    """Twelve qutrit kets in four orthonormal bases, each labelled by the SIC indices it annihilates."""

    kets: np.ndarray
    labels: tuple[str, ...]
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "kets", _frozen(self.kets))

    @property
    def dim(self) -> int:
        return self.kets.shape[1]

    def ket(self, label: str) -> np.ndarray:
        return self.kets[self.labels.index(label)]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "label": "mub",
            "labels": list(self.labels),
            "bases": [list(b) for b in self.bases],
            "kets": [_ket_to_pairs(k) for k in self.kets],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MubSet":
        kets = np.array([_pairs_to_ket(k) for k in data["kets"]])
        return cls(kets, tuple(data["labels"]), tuple(tuple(b) for b in data["bases"]))


def build_qutrit_mubs(hesse: SicSet | None = None, tol: float | None = None) -> MubSet:
    """The four qutrit MUBs, each vector found as the common null vector of an AG(2,3) line of Hesse kets.

    Raises:
        ConstructionError: if some line's three kets do not span exactly a plane.
    """
    tol = get_tol(tol)
    hesse = build_hesse_sic(tol) if hesse is None else hesse
    if hesse.dim != 3 or len(hesse) != 9:
        raise ValueError("build_qutrit_mubs needs the nine-element Hesse SIC")
    kets, labels, bases = [], [], []
    for parallel_class in AFFINE_LINES:
        basis = []
        for line in parallel_class:
            rows = np.array([hesse.kets[int(ch) - 1].conj() for ch in line])
            _, s, vh = np.linalg.svd(rows)
            if s[-1] > tol or s[-2] < np.sqrt(tol):
                raise ConstructionError(f"null space for line {line} is not one-dimensional (singular values {s})")
            basis.append(len(kets))
            kets.append(_fix_phase(vh[-1].conj()))
            labels.append(line)
        bases.append(tuple(basis))
    return MubSet(np.array(kets), tuple(labels), tuple(bases))
