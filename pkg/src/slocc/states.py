"""Multipartite pure states, canonical forms, and conversions between them.

Everything here is a plain value object over dense numpy arrays.  States are
stored as flat complex amplitude vectors in row-major order with party 0
slowest, so serialized states are bit-comparable across implementations.
All operations are pure functions; nothing mutates after construction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-12
RANK_TOL = 1e-9
CLASS_TOL = 1e-9


class DomainError(ValueError):
    """A parameter is outside the domain an operation is defined on."""


class ShapeMismatchError(ValueError):
    """Operands have incompatible party counts or local dimensions."""


def _as_vector(v) -> np.ndarray:
    """Coerce a LocalVector or array-like to a 1-D complex array."""
    entries = getattr(v, "entries", v)
    arr = np.asarray(entries, dtype=np.complex128)
    if arr.ndim != 1:
        raise ShapeMismatchError(f"expected a vector, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class LocalVector:
    """A single party's state vector."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.complex128)
        if arr.shape != (self.dim,):
            raise ShapeMismatchError(f"entries shape {arr.shape} != ({self.dim},)")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @classmethod
    def of(cls, entries) -> "LocalVector":
        arr = _as_vector(entries)
        return cls(arr.shape[0], arr)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def normalized(self) -> "LocalVector":
        n = self.norm
        if n < 1e-300:
            raise DomainError("cannot normalize a zero vector")
        return LocalVector(self.dim, self.entries / n)


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense n-party pure state.

    amplitudes has length prod(dims), row-major over party indices with
    party 0 slowest.  Unit norm is enforced at construction (tolerance
    NORM_TOL); use ``PureState.normalized`` for raw vectors.
    """

    dims: tuple
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if any(d < 1 for d in dims):
            raise DomainError(f"local dimensions must be positive, got {dims}")
        arr = np.asarray(self.amplitudes, dtype=np.complex128).ravel()
        if arr.size != int(np.prod(dims)):
            raise ShapeMismatchError(
                f"{arr.size} amplitudes for dims {dims} (need {int(np.prod(dims))})")
        nrm = np.linalg.norm(arr)
        if abs(nrm - 1.0) > NORM_TOL:
            raise DomainError(f"state norm {nrm!r} deviates from 1 beyond {NORM_TOL}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @classmethod
    def normalized(cls, dims, amplitudes) -> "PureState":
        arr = np.asarray(amplitudes, dtype=np.complex128).ravel()
        nrm = np.linalg.norm(arr)
        if nrm < 1e-300:
            raise DomainError("cannot normalize a zero state vector")
        return cls(tuple(dims), arr / nrm)

    @classmethod
    def from_tensor(cls, tensor) -> "PureState":
        arr = np.asarray(tensor, dtype=np.complex128)
        return cls(arr.shape, arr.ravel())

    @classmethod
    def from_product(cls, vectors) -> "PureState":
        vecs = [_as_vector(v) for v in vectors]
        amp = vecs[0]
        for v in vecs[1:]:
            amp = np.kron(amp, v)
        return cls(tuple(v.shape[0] for v in vecs), amp)

    @property
    def parties(self) -> int:
        return len(self.dims)

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims)

    def overlap(self, other: "PureState") -> complex:
        if self.dims != other.dims:
            raise ShapeMismatchError(f"dims {self.dims} != {other.dims}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_json(self) -> str:
        amps = [[float(a.real), float(a.imag)] for a in self.amplitudes]
        return json.dumps({"dims": list(self.dims), "amplitudes": amps})

    @classmethod
    def from_json(cls, text: str) -> "PureState":
        data = json.loads(text)
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
        return cls(tuple(data["dims"]), amps)


def ghz_state(levels: int = 2, parties: int = 3) -> PureState:
    """Uniform rank-``levels`` GHZ state on ``parties`` parties."""
    t = np.zeros((levels,) * parties, dtype=np.complex128)
    for i in range(levels):
        t[(i,) * parties] = 1.0 / math.sqrt(levels)
    return PureState.from_tensor(t)


def w_state() -> PureState:
    return PureState((2, 2, 2), np.array([0, 1, 1, 0, 1, 0, 0, 0]) / math.sqrt(3))


def w_class_state(a: float, b: float, c: float, d: float) -> PureState:
    """W-class representative (sqrt(c)|0>+sqrt(d)|1>)|00> + |0>(sqrt(a)|01>+sqrt(b)|10>)."""
    if min(a, b, c, d) < 0 or abs(a + b + c + d - 1.0) > NORM_TOL:
        raise DomainError("weights must be nonnegative and sum to 1")
    amp = np.zeros(8, dtype=np.complex128)
    amp[0] = math.sqrt(c)   # |000>
    amp[4] = math.sqrt(d)   # |100>
    amp[1] = math.sqrt(a)   # |001>
    amp[2] = math.sqrt(b)   # |010>
    return PureState((2, 2, 2), amp)


# ----------------------------------------------------------------------------
# GHZ-class five-angle form
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class GhzClassForm:
    """Five-angle parametrization of a GHZ-class 3-qubit state.

    delta in (0, pi/4], alpha/beta/gamma in (0, pi/2], phi in [0, 2*pi).
    The state is sqrt(K) (cos(delta)|000> + sin(delta) e^{i phi} |pA pB pC>)
    with |pX> = cos(x)|0> + sin(x)|1>.
    """

    delta: float
    alpha: float
    beta: float
    gamma: float
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * math.pi))
        if not 0.0 < self.delta <= math.pi / 4 + 1e-15:
            raise DomainError(f"delta={self.delta} outside (0, pi/4]")
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not 0.0 < v <= math.pi / 2 + 1e-15:
                raise DomainError(f"{name}={v} outside (0, pi/2]")

    @classmethod
    def from_overlaps(cls, la: float, lb: float, lc: float,
                      delta: float = math.pi / 4, phi: float = 0.0) -> "GhzClassForm":
        """Form with product-term local overlaps (la, lb, lc), each in [0, 1)."""
        for v in (la, lb, lc):
            if not 0.0 <= v < 1.0:
                raise DomainError(f"overlap {v} outside [0, 1)")
        return cls(delta, math.acos(la), math.acos(lb), math.acos(lc), phi)

    @classmethod
    def ghz_point(cls) -> "GhzClassForm":
        return cls(math.pi / 4, math.pi / 2, math.pi / 2, math.pi / 2, 0.0)

    @property
    def overlaps(self) -> tuple:
        return (math.cos(self.alpha), math.cos(self.beta), math.cos(self.gamma))

    @property
    def cross_weight(self) -> float:
        """2 c_delta s_delta c_alpha c_beta c_gamma cos(phi); K = 1/(1 + this)."""
        ca, cb, cg = self.overlaps
        return 2.0 * math.cos(self.delta) * math.sin(self.delta) * ca * cb * cg * math.cos(self.phi)

    @property
    def K(self) -> float:
        return 1.0 / (1.0 + self.cross_weight)


@dataclass(frozen=True, eq=False)
class TwoTermDecomposition:
    """Product-term pair (1/sqrt(2)) (alpha |a1 b1 c1 ...> + beta |a2 b2 c2 ...>).

    Term vectors are unit local vectors, one per party.  ``overlap_k`` caches
    the product of cross-term local overlaps.  Unit norm of the represented
    state is enforced: (|alpha|^2+|beta|^2)/2 + Re(conj(alpha) beta k) = 1.
    """

    coeff_a: complex
    coeff_b: complex
    terms_a: tuple
    terms_b: tuple
    overlap_k: complex = field(init=False)

    def __post_init__(self):
        ta = tuple(_as_vector(v) for v in self.terms_a)
        tb = tuple(_as_vector(v) for v in self.terms_b)
        if len(ta) != len(tb):
            raise ShapeMismatchError("terms must cover the same parties")
        for v in ta + tb:
            if abs(np.linalg.norm(v) - 1.0) > NORM_TOL:
                raise DomainError("term vectors must be unit norm")
            v.flags.writeable = False
        object.__setattr__(self, "terms_a", ta)
        object.__setattr__(self, "terms_b", tb)
        object.__setattr__(self, "coeff_a", complex(self.coeff_a))
        object.__setattr__(self, "coeff_b", complex(self.coeff_b))
        k = complex(np.prod([np.vdot(a, b) for a, b in zip(ta, tb)]))
        object.__setattr__(self, "overlap_k", k)
        total = 0.5 * (abs(self.coeff_a) ** 2 + abs(self.coeff_b) ** 2) \
            + (np.conj(self.coeff_a) * self.coeff_b * k).real
        if abs(total - 1.0) > 1e-10:
            raise DomainError(f"represented state norm^2 = {total!r}, expected 1")

    @classmethod
    def normalized(cls, coeff_a, coeff_b, terms_a, terms_b) -> "TwoTermDecomposition":
        """Rescale both coefficients so the represented state is unit norm."""
        ta = [_as_vector(v) for v in terms_a]
        tb = [_as_vector(v) for v in terms_b]
        ta = [v / np.linalg.norm(v) for v in ta]
        tb = [v / np.linalg.norm(v) for v in tb]
        k = complex(np.prod([np.vdot(a, b) for a, b in zip(ta, tb)]))
        total = 0.5 * (abs(coeff_a) ** 2 + abs(coeff_b) ** 2) \
            + (np.conj(coeff_a) * coeff_b * k).real
        if total <= 0:
            raise DomainError("coefficient pair yields nonpositive norm")
        s = 1.0 / math.sqrt(total)
        return cls(coeff_a * s, coeff_b * s, tuple(ta), tuple(tb))

    @property
    def parties(self) -> int:
        return len(self.terms_a)

    @property
    def local_overlaps(self) -> tuple:
        return tuple(complex(np.vdot(a, b)) for a, b in zip(self.terms_a, self.terms_b))

    def state(self) -> PureState:
        amp_a = self.terms_a[0]
        amp_b = self.terms_b[0]
        for va, vb in zip(self.terms_a[1:], self.terms_b[1:]):
            amp_a = np.kron(amp_a, va)
            amp_b = np.kron(amp_b, vb)
        amp = (self.coeff_a * amp_a + self.coeff_b * amp_b) / math.sqrt(2.0)
        return PureState(tuple(v.shape[0] for v in self.terms_a), amp)


def ghz_form_to_state(form: GhzClassForm) -> PureState:
    """Expand the five-angle form into its 3-qubit amplitude tensor."""
    cd, sd = math.cos(form.delta), math.sin(form.delta)
    rk = math.sqrt(form.K)
    pa = np.array([math.cos(form.alpha), math.sin(form.alpha)], dtype=np.complex128)
    pb = np.array([math.cos(form.beta), math.sin(form.beta)], dtype=np.complex128)
    pc = np.array([math.cos(form.gamma), math.sin(form.gamma)], dtype=np.complex128)
    t = np.zeros((2, 2, 2), dtype=np.complex128)
    t[0, 0, 0] = cd
    t += sd * np.exp(1j * form.phi) * np.einsum("i,j,k->ijk", pa, pb, pc)
    return PureState.from_tensor(rk * t)


def two_term_of(form: GhzClassForm) -> TwoTermDecomposition:
    """The unique product-term pair of a GHZ-class form."""
    rk = math.sqrt(2.0 * form.K)
    e0 = np.array([1.0, 0.0], dtype=np.complex128)
    pa = np.array([math.cos(form.alpha), math.sin(form.alpha)], dtype=np.complex128)
    pb = np.array([math.cos(form.beta), math.sin(form.beta)], dtype=np.complex128)
    pc = np.array([math.cos(form.gamma), math.sin(form.gamma)], dtype=np.complex128)
    alpha = rk * math.cos(form.delta)
    beta = rk * math.sin(form.delta) * np.exp(1j * form.phi)
    return TwoTermDecomposition(alpha, beta, (e0, e0, e0), (pa, pb, pc))


def ghz_two_term(levels: int = 2, parties: int = 3):
    """First-versus-rest split of the uniform GHZ state.

    For levels > 2 the second term is entangled, so the result is a
    (coeff_a, coeff_b, PureState, PureState) split rather than a product
    decomposition; both carry I = 0, N = 1.
    """
    from .locc_sim import TwoTermSplit

    m = levels
    t1 = np.zeros((m,) * parties, dtype=np.complex128)
    t1[(0,) * parties] = 1.0
    t2 = np.zeros((m,) * parties, dtype=np.complex128)
    for i in range(1, m):
        t2[(i,) * parties] = 1.0 / math.sqrt(m - 1)
    return TwoTermSplit(
        math.sqrt(2.0 / m), math.sqrt(2.0 * (m - 1) / m),
        PureState.from_tensor(t1), PureState.from_tensor(t2))


# ----------------------------------------------------------------------------
# Reduced densities, rank, classification
# ----------------------------------------------------------------------------

def reduced_density(state: PureState, party: int) -> np.ndarray:
    """Single-party reduced density matrix (positive semidefinite, trace 1)."""
    if not 0 <= party < state.parties:
        raise ShapeMismatchError(f"party {party} out of range for {state.parties} parties")
    t = np.moveaxis(state.tensor(), party, 0).reshape(state.dims[party], -1)
    return t @ t.conj().T


def numeric_rank(matrix, tol: float = RANK_TOL) -> int:
    """Number of singular values above ``tol`` (absolute)."""
    s = np.linalg.svd(np.asarray(matrix, dtype=np.complex128), compute_uv=False)
    return int(np.sum(s > tol))


def equal_up_to_global_phase(s1: PureState, s2: PureState, tol: float = 1e-9) -> bool:
    return abs(s1.overlap(s2)) >= 1.0 - tol


def is_ghz_class(state: PureState, class_tol: float = CLASS_TOL) -> bool:
    """True iff the 3-qubit state has a nonzero residual tangle."""
    from .measures import three_tangle

    return three_tangle(state) > class_tol


# ----------------------------------------------------------------------------
# Two-term decomposition of an arbitrary GHZ-class 3-qubit state
# ----------------------------------------------------------------------------

def _det_pencil_roots(t0: np.ndarray, t1: np.ndarray):
    """Roots z of det(t0 + z t1) = 0, with None standing for z = infinity."""
    c2 = complex(np.linalg.det(t1))
    c0 = complex(np.linalg.det(t0))
    c1 = complex(t0[0, 0] * t1[1, 1] + t1[0, 0] * t0[1, 1]
                 - t0[0, 1] * t1[1, 0] - t1[0, 1] * t0[1, 0])
    scale = max(abs(c0), abs(c1), abs(c2))
    if scale < 1e-14:
        return [0j, None]
    if abs(c2) > 1e-12 * scale:
        disc = np.sqrt(c1 * c1 - 4.0 * c2 * c0)
        # stable quadratic: pick the subtraction-free branch first
        q = -0.5 * (c1 + disc) if abs(c1 + disc) >= abs(c1 - disc) else -0.5 * (c1 - disc)
        roots = []
        if abs(q) > 0:
            roots = [q / c2, c0 / q]
        else:
            roots = [0j, 0j]
        return roots
    if abs(c1) > 1e-12 * scale:
        return [-c0 / c1, None]
    return [None]


def _rank_one_factors(m: np.ndarray):
    """Best rank-1 factorization m ~ scale * outer(u, v) with unit u, v."""
    w, s, vh = np.linalg.svd(m)
    return s[0], w[:, 0], vh[0].conj(), (s[1] if len(s) > 1 else 0.0)


def two_term_of_state(state: PureState, tol: float = 1e-9) -> TwoTermDecomposition:
    """Recover the unique two-product-term decomposition of a GHZ-class state.

    Works by finding the two directions on party 0 whose contraction with the
    state is a product operator (roots of a 2x2 determinant pencil), then
    solving linearly for the party-0 vectors.
    """
    if state.dims != (2, 2, 2):
        raise ShapeMismatchError("two-term recovery is defined for 3-qubit states")
    psi = state.tensor()
    roots = [z for z in _det_pencil_roots(psi[0], psi[1])]
    cov = []
    for z in roots:
        if z is None:
            w = np.array([0.0, 1.0], dtype=np.complex128)
        else:
            w = np.array([1.0, z], dtype=np.complex128)
            w /= np.linalg.norm(w)
        cov.append(w)
    if len(cov) < 2 or abs(abs(np.vdot(cov[0], cov[1])) - 1.0) < 1e-9:
        raise DomainError("degenerate product-direction pencil: state is not GHZ-class")
    prods = []
    for w in cov:
        m = np.einsum("a,ajk->jk", w, psi)
        s0, u, v, s1 = _rank_one_factors(m)
        if s1 > tol:
            raise DomainError("contraction is not rank 1: state is not GHZ-class")
        prods.append((u, v))
    # psi_{ajk} = g1_a (b1 x c1)_{jk} + g2_a (b2 x c2)_{jk}; roots pair up crossed
    (b1, c1), (b2, c2) = prods[1], prods[0]
    basis = np.stack([np.outer(b1, c1).ravel(), np.outer(b2, c2).ravel()], axis=1)
    g, *_ = np.linalg.lstsq(basis, psi.reshape(2, 4).T, rcond=None)
    g1, g2 = g[0], g[1]
    resid = np.linalg.norm(basis @ g - psi.reshape(2, 4).T)
    if resid > 1e-8:
        raise DomainError("state is not a two-product-term superposition")
    n1, n2 = np.linalg.norm(g1), np.linalg.norm(g2)
    if min(n1, n2) < tol:
        raise DomainError("one product term vanishes: state is not GHZ-class")
    return TwoTermDecomposition(
        math.sqrt(2.0) * n1, math.sqrt(2.0) * n2,
        (g1 / n1, b1, c1), (g2 / n2, b2, c2))


# ----------------------------------------------------------------------------
# Generalized Schmidt (Acin) canonical form
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AcinForm:
    """Canonical form l0|000> + l1 e^{i phase}|100> + l2|101> + l3|110> + l4|111>.

    ``local_unitaries`` map the canonical state back onto the original basis:
    state == (U_A x U_B x U_C) |canonical>, up to global phase.
    """

    lambdas: tuple
    phase: float
    local_unitaries: tuple
    residual: float = 0.0

    def canonical_state(self) -> PureState:
        l0, l1, l2, l3, l4 = self.lambdas
        t = np.zeros((2, 2, 2), dtype=np.complex128)
        t[0, 0, 0] = l0
        t[1, 0, 0] = l1 * np.exp(1j * self.phase)
        t[1, 0, 1] = l2
        t[1, 1, 0] = l3
        t[1, 1, 1] = l4
        return PureState.normalized((2, 2, 2), t.ravel())

    def reconstruct(self) -> PureState:
        t = self.canonical_state().tensor()
        for p, u in enumerate(self.local_unitaries):
            t = np.moveaxis(np.tensordot(u, t, axes=([1], [p])), 0, p)
        return PureState.from_tensor(t)


def _apply_one_party(mat: np.ndarray, tensor: np.ndarray, party: int) -> np.ndarray:
    return np.moveaxis(np.tensordot(mat, tensor, axes=([1], [party])), 0, party)


def _acin_candidate(psi: np.ndarray, z):
    if z is None:
        ua = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
    else:
        n = math.sqrt(1.0 + abs(z) ** 2)
        ua = np.array([[1.0, z], [-np.conj(z), 1.0]], dtype=np.complex128) / n
    p1 = _apply_one_party(ua, psi, 0)
    w, s, vh = np.linalg.svd(p1[0])
    vb = w.conj().T
    vc = vh.conj()
    p2 = _apply_one_party(vc, _apply_one_party(vb, p1, 1), 2)

    def ang(val):
        return float(np.angle(val)) if abs(val) > 1e-13 else 0.0

    t = -ang(p2[1, 0, 1]) - ang(p2[1, 1, 0]) + ang(p2[1, 1, 1])
    da = np.diag(np.exp(1j * np.array([-ang(p2[0, 0, 0]), t])))
    db = np.diag(np.exp(1j * np.array([0.0, -ang(p2[1, 1, 0]) - t])))
    dc = np.diag(np.exp(1j * np.array([0.0, -ang(p2[1, 0, 1]) - t])))
    p3 = _apply_one_party(dc, _apply_one_party(db, _apply_one_party(da, p2, 0), 1), 2)

    lam = (abs(p3[0, 0, 0]), abs(p3[1, 0, 0]), abs(p3[1, 0, 1]),
           abs(p3[1, 1, 0]), abs(p3[1, 1, 1]))
    phase = ang(p3[1, 0, 0])
    residual = math.sqrt(abs(p3[0, 0, 1]) ** 2 + abs(p3[0, 1, 0]) ** 2
                         + abs(p3[0, 1, 1]) ** 2)
    unitaries = tuple(np.conj(g).T for g in (da @ ua, db @ vb, dc @ vc))
    return AcinForm(lam, phase, unitaries, residual)


def acin_decompose(state: PureState) -> AcinForm:
    """Generalized Schmidt decomposition of a 3-qubit pure state.

    Rotates party 0 so the top 2x2 block of the amplitude tensor becomes
    singular (quadratic pencil), diagonalizes it with local unitaries on the
    other parties, and absorbs phases so only the |100> amplitude stays
    complex.  Root selection: valid residual first, then phase in [0, pi],
    then l0 >= l4, then largest l0.
    """
    if state.dims != (2, 2, 2):
        raise ShapeMismatchError("the canonical form is defined for 3-qubit states")
    psi = state.tensor()
    cands = [_acin_candidate(psi, z) for z in _det_pencil_roots(psi[0], psi[1])]
    best = min(cands, key=lambda f: (
        f.residual > 1e-9,
        math.sin(f.phase) < -1e-12,
        not f.lambdas[0] >= f.lambdas[4] - 1e-12,
        f.residual,
        -f.lambdas[0],
    ))
    if math.sin(best.phase) < -1e-12 or best.residual > 1e-8:
        raise DomainError("no canonical-form candidate met the residual/phase contract")
    phase = min(max(best.phase, 0.0), math.pi)
    return AcinForm(best.lambdas, phase, best.local_unitaries, best.residual)


# ----------------------------------------------------------------------------
# Random sampling helpers (seeded numpy Generators throughout)
# ----------------------------------------------------------------------------

def random_haar_state(dims, rng: np.random.Generator) -> PureState:
    n = int(np.prod(dims))
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return PureState.normalized(tuple(dims), v)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_ghz_form(rng: np.random.Generator, margin: float = 1e-3) -> GhzClassForm:
    delta = rng.uniform(margin, math.pi / 4)
    angles = rng.uniform(margin, math.pi / 2, size=3)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return GhzClassForm(delta, angles[0], angles[1], angles[2], phi)


def random_local_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)


def random_two_term(rng: np.random.Generator, parties: int = 3, dim: int = 2) -> TwoTermDecomposition:
    terms_a = [random_local_vector(dim, rng) for _ in range(parties)]
    terms_b = [random_local_vector(dim, rng) for _ in range(parties)]
    raw = rng.normal(size=4)
    ca = raw[0] + 1j * raw[1]
    cb = raw[2] + 1j * raw[3]
    return TwoTermDecomposition.normalized(ca, cb, terms_a, terms_b)
