"""Grid functions: vector-valued samples on uniform cell-centered box grids.

Values live on the midpoints of a uniform subdivision of an open box, stored
as an array of shape ``grid.n + (space.dim,)`` (row-major over the node
multi-index).  Midpoint quadrature, central finite differences with a
second-order one-sided boundary ring, shift-difference norms, mollification,
even reflection extension, boundary traces and functional pairings all
operate on this representation.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import banach
from .banach import SpaceDescriptor, scalar_space
from .errors import DimensionMismatchError, GridError


@dataclass(frozen=True)
class BoxDomain:
    """Open axis-aligned box (lo_1, hi_1) x ... x (lo_d, hi_d)."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lo, dtype=np.float64))
        hi = np.atleast_1d(np.asarray(self.hi, dtype=np.float64))
        if lo.shape != hi.shape or lo.ndim != 1:
            raise DimensionMismatchError("lo and hi must be 1-d of equal length")
        if not np.all(hi > lo):
            raise GridError("box needs hi > lo on every axis")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def d(self) -> int:
        return self.lo.shape[0]

    @property
    def volume(self) -> float:
        return float(np.prod(self.hi - self.lo))

    def to_dict(self) -> dict:
        return {"lo": self.lo.tolist(), "hi": self.hi.tolist()}


def unit_box(d: int) -> BoxDomain:
    return BoxDomain(np.zeros(d), np.ones(d))


@dataclass(frozen=True)
class GridSpec:
    """Per-axis subdivision counts of a uniform cell-centered grid."""

    n: tuple[int, ...]

    def __post_init__(self):
        n = tuple(int(k) for k in np.atleast_1d(self.n))
        if any(k < 2 for k in n):
            raise GridError(f"need at least 2 cells per axis, got {n}")
        object.__setattr__(self, "n", n)

    def spacing(self, domain: BoxDomain) -> np.ndarray:
        if len(self.n) != domain.d:
            raise DimensionMismatchError("grid/domain dimension mismatch")
        return (domain.hi - domain.lo) / np.asarray(self.n, dtype=np.float64)

    def axes(self, domain: BoxDomain) -> list[np.ndarray]:
        h = self.spacing(domain)
        return [
            domain.lo[j] + (np.arange(self.n[j]) + 0.5) * h[j]
            for j in range(domain.d)
        ]

    def refine(self, factor: int = 2) -> "GridSpec":
        return GridSpec(tuple(k * factor for k in self.n))


def grid_centers(domain: BoxDomain, grid: GridSpec) -> np.ndarray:
    """Cell-center coordinates, shape grid.n + (d,)."""
    axes = grid.axes(domain)
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack(mesh, axis=-1)


@dataclass
class GridFunction:
    """A sampled map from the box into a concrete Banach space."""

    domain: BoxDomain
    grid: GridSpec
    space: SpaceDescriptor
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        expected = self.grid.n + (self.space.dim,)
        if v.shape != expected:
            raise DimensionMismatchError(
                f"values shape {v.shape} does not match grid+space {expected}"
            )
        self.values = v

    @property
    def node_count(self) -> int:
        return int(np.prod(self.grid.n))

    def like(self, values: np.ndarray) -> "GridFunction":
        return GridFunction(self.domain, self.grid, self.space, values)

    def to_dict(self) -> dict:
        return {
            "domain": self.domain.to_dict(),
            "grid": {"n": list(self.grid.n)},
            "space": self.space.to_dict(),
            "values": np.ravel(self.values).tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GridFunction":
        domain = BoxDomain(np.asarray(d["domain"]["lo"]), np.asarray(d["domain"]["hi"]))
        grid = GridSpec(tuple(d["grid"]["n"]))
        space = SpaceDescriptor.from_dict(d["space"])
        values = np.asarray(d["values"], dtype=np.float64).reshape(
            grid.n + (space.dim,)
        )
        return cls(domain, grid, space, values)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> "GridFunction":
        return cls.from_dict(json.loads(s))

    def to_csv(self) -> str:
        """One row per node: node coordinates, then value coordinates."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        d = self.domain.d
        w.writerow([f"x{j}" for j in range(d)] + [f"v{s}" for s in range(self.space.dim)])
        coords = grid_centers(self.domain, self.grid).reshape(-1, d)
        vals = self.values.reshape(-1, self.space.dim)
        for row in range(coords.shape[0]):
            w.writerow(
                [repr(float(c)) for c in coords[row]]
                + [repr(float(v)) for v in vals[row]]
            )
        return buf.getvalue()


def from_scalar(domain: BoxDomain, grid: GridSpec, values: np.ndarray) -> GridFunction:
    """Wrap a scalar node array (shape grid.n) as a dim-1 grid function."""
    values = np.asarray(values, dtype=np.float64)
    return GridFunction(domain, grid, scalar_space(), values[..., None])


def pointwise_norms(u: GridFunction) -> np.ndarray:
    """Scalar node array of the value-space norms, shape grid.n."""
    return np.asarray(banach.norm(u.space, u.values))


def pointwise_norm_function(u: GridFunction) -> GridFunction:
    return from_scalar(u.domain, u.grid, pointwise_norms(u))


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def sample(
    domain: BoxDomain,
    grid: GridSpec,
    space: SpaceDescriptor,
    f,
    vectorized: bool = False,
) -> GridFunction:
    """Evaluate a rule at the cell centers.

    ``f`` maps a coordinate vector of length d to a value vector of length
    space.dim; with ``vectorized=True`` it must accept an (N, d) array and
    return (N, dim).  Non-finite values are rejected with the offending
    multi-index in the message.
    """
    centers = grid_centers(domain, grid)
    flat = centers.reshape(-1, domain.d)
    if vectorized:
        vals = np.asarray(f(flat), dtype=np.float64)
        if vals.shape != (flat.shape[0], space.dim):
            raise DimensionMismatchError(
                f"vectorized rule returned shape {vals.shape}, "
                f"expected {(flat.shape[0], space.dim)}"
            )
    else:
        vals = np.empty((flat.shape[0], space.dim))
        for i in range(flat.shape[0]):
            vals[i] = np.asarray(f(flat[i]), dtype=np.float64)
    bad = ~np.isfinite(vals)
    if bad.any():
        i = int(np.argwhere(bad.any(axis=1))[0][0])
        idx = tuple(int(k) for k in np.unravel_index(i, grid.n))
        raise ValueError(f"rule produced non-finite value at node {idx}")
    return GridFunction(domain, grid, space, vals.reshape(grid.n + (space.dim,)))


# ---------------------------------------------------------------------------
# quadrature norms
# ---------------------------------------------------------------------------


def _scalar_lp(node_values: np.ndarray, cell_volume: float, p: float) -> float:
    if math.isinf(p):
        return float(np.max(node_values))
    if p == 1.0:
        return float(np.sum(node_values) * cell_volume)
    return float((np.sum(node_values**p) * cell_volume) ** (1.0 / p))


def bochner_norm(u: GridFunction, p: float) -> float:
    """Midpoint-quadrature L^p norm of the pointwise value-space norms.

    By construction this is bit-identical to the scalar Bochner norm of
    ``pointwise_norm_function(u)``.
    """
    if not (p >= 1.0):
        raise ValueError(f"p must be >= 1 or inf, got {p}")
    g = pointwise_norms(u)
    vol = float(np.prod(u.grid.spacing(u.domain)))
    return _scalar_lp(g, vol, p)


# ---------------------------------------------------------------------------
# finite differences
# ---------------------------------------------------------------------------


def _axis_slices(d: int, j: int, s: slice) -> tuple:
    out = [slice(None)] * d
    out[j] = s
    return tuple(out)


@dataclass
class DerivativeField:
    """Per-direction difference-quotient fields D[j] of a grid function.

    ``scheme`` records the stencil; with the central scheme the first and
    last layer along each axis use the matching second-order one-sided
    stencil, and checks that need interior accuracy should mask the ring
    via :func:`interior_mask`.
    """

    source: GridFunction
    ds: list[GridFunction]
    scheme: str
    h: np.ndarray

    def __getitem__(self, j: int) -> GridFunction:
        return self.ds[j]

    def __len__(self) -> int:
        return len(self.ds)


def interior_mask(grid: GridSpec, width: int = 1) -> np.ndarray:
    """Boolean node mask, True away from the boundary ring of given width."""
    mask = np.ones(grid.n, dtype=bool)
    d = len(grid.n)
    for j in range(d):
        mask[_axis_slices(d, j, slice(0, width))] = False
        mask[_axis_slices(d, j, slice(-width, None))] = False
    return mask


def finite_difference(u: GridFunction, scheme: str = "central") -> DerivativeField:
    """Difference-quotient derivative fields along every axis.

    central: second-order interior stencil, second-order one-sided at the
    two boundary layers.  forward/backward: first-order one-sided, falling
    back to the mirrored stencil on the last (first) layer.
    """
    if scheme not in ("central", "forward", "backward"):
        raise ValueError(f"unknown scheme {scheme!r}")
    d = u.domain.d
    h = u.grid.spacing(u.domain)
    v = u.values
    fields = []
    for j in range(d):
        nj = u.grid.n[j]
        if nj < 3:
            raise GridError(f"axis {j} has {nj} cells; stencils need >= 3")
        dv = np.empty_like(v)
        S = lambda a, b: _axis_slices(d, j, slice(a, b))
        if scheme == "central":
            dv[S(1, -1)] = (v[S(2, None)] - v[S(0, -2)]) / (2.0 * h[j])
            dv[S(0, 1)] = (-3.0 * v[S(0, 1)] + 4.0 * v[S(1, 2)] - v[S(2, 3)]) / (
                2.0 * h[j]
            )
            dv[S(-1, None)] = (
                3.0 * v[S(-1, None)] - 4.0 * v[S(-2, -1)] + v[S(-3, -2)]
            ) / (2.0 * h[j])
        elif scheme == "forward":
            dv[S(0, -1)] = (v[S(1, None)] - v[S(0, -1)]) / h[j]
            dv[S(-1, None)] = (v[S(-1, None)] - v[S(-2, -1)]) / h[j]
        else:
            dv[S(1, None)] = (v[S(1, None)] - v[S(0, -1)]) / h[j]
            dv[S(0, 1)] = (v[S(1, 2)] - v[S(0, 1)]) / h[j]
        fields.append(u.like(dv))
    return DerivativeField(source=u, ds=fields, scheme=scheme, h=h)


def w_norm(u: GridFunction, p: float, scheme: str = "central") -> float:
    """Discrete W^{1,p} norm: Bochner p-norm of u plus the sum over axes of
    the Bochner p-norms of the difference-quotient fields."""
    total = bochner_norm(u, p)
    for dj in finite_difference(u, scheme).ds:
        total += bochner_norm(dj, p)
    return total


def gf_sub(u: GridFunction, v: GridFunction) -> GridFunction:
    if u.grid.n != v.grid.n or u.space.dim != v.space.dim:
        raise DimensionMismatchError("grid functions do not conform")
    return u.like(u.values - v.values)


# ---------------------------------------------------------------------------
# shift-difference norms (the difference-quotient criterion's raw material)
# ---------------------------------------------------------------------------


def shift_difference_norm(u: GridFunction, j: int, steps: int, p: float) -> float:
    """L^p norm over the shrunken box of u(.+ steps*h_j e_j) - u.

    Only nodes whose shifted partner stays on the grid contribute; the
    quadrature weight is the same cell volume as on the full box.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    nj = u.grid.n[j]
    if steps >= nj:
        raise GridError(f"shift of {steps} cells exceeds axis {j} ({nj} cells)")
    d = u.domain.d
    diff = (
        u.values[_axis_slices(d, j, slice(steps, None))]
        - u.values[_axis_slices(d, j, slice(0, -steps))]
    )
    g = np.asarray(banach.norm(u.space, diff))
    vol = float(np.prod(u.grid.spacing(u.domain)))
    return _scalar_lp(g, vol, p)


# ---------------------------------------------------------------------------
# even reflection extension
# ---------------------------------------------------------------------------


def extend_reflect(u: GridFunction, pad: int) -> GridFunction:
    """Extend by even reflection across every face, pad cells per side.

    The restriction of the result to the original index range equals u
    exactly; the cell-centered layout makes np.pad's symmetric mode the
    exact mirror image across each face plane.
    """
    if pad < 1:
        raise ValueError("pad must be >= 1")
    if pad > min(u.grid.n):
        raise GridError(
            f"pad {pad} exceeds the grid ({min(u.grid.n)} cells on the shortest axis)"
        )
    d = u.domain.d
    h = u.grid.spacing(u.domain)
    ext = np.pad(u.values, [(pad, pad)] * d + [(0, 0)], mode="symmetric")
    dom = BoxDomain(u.domain.lo - pad * h, u.domain.hi + pad * h)
    grid = GridSpec(tuple(k + 2 * pad for k in u.grid.n))
    return GridFunction(dom, grid, u.space, ext)


# ---------------------------------------------------------------------------
# mollification
# ---------------------------------------------------------------------------


def _bump(rho_arg_sq: np.ndarray) -> np.ndarray:
    """exp(1/(s^2-1)) on s^2 < 1, with s^2 passed in; 0 outside."""
    out = np.zeros_like(rho_arg_sq)
    inside = rho_arg_sq < 1.0
    out[inside] = np.exp(1.0 / (rho_arg_sq[inside] - 1.0))
    return out


def mollifier_weights(h: np.ndarray, level: int) -> tuple[np.ndarray, np.ndarray]:
    """Offsets (m, d) and normalized weights (m,) of the discrete mollifier.

    The kernel is the standard normalized bump scaled to support radius
    1/level, evaluated at integer cell offsets and renormalized to unit sum.
    """
    if level < 1:
        raise ValueError("level must be >= 1")
    radius = 1.0 / level
    K = np.floor(radius / h * (1.0 - 1e-12)).astype(int)
    if np.all(K < 1):
        raise GridError(
            f"mollifier support radius {radius} is below one cell; "
            "refine the grid or lower the level"
        )
    ranges = [np.arange(-k, k + 1) for k in K]
    offsets = np.array(list(itertools.product(*ranges)), dtype=np.int64)
    xi = offsets * h
    arg_sq = ((xi * level) ** 2).sum(axis=1)
    w = _bump(arg_sq)
    keep = w > 0.0
    offsets, w = offsets[keep], w[keep]
    w = w / w.sum()
    return offsets, w


def mollify(u: GridFunction, level: int) -> GridFunction:
    """Convolve with the discrete bump mollifier of support radius 1/level.

    The input is extended internally by even reflection so the output lives
    on the same grid.  Computed as u + sum_k w_k (shift_k u - u), which
    preserves constants bit-exactly and never pushes values outside the
    convex hull of the reflected samples.
    """
    h = u.grid.spacing(u.domain)
    offsets, w = mollifier_weights(h, level)
    pad = int(np.abs(offsets).max())
    ext = extend_reflect(u, pad).values
    d = u.domain.d
    n = u.grid.n
    out = u.values.copy()
    center = u.values
    for k, wk in zip(offsets, w):
        if not np.any(k):
            continue
        sl = tuple(slice(pad + k[j], pad + k[j] + n[j]) for j in range(d))
        out += wk * (ext[sl] - center)
    return u.like(out)


# ---------------------------------------------------------------------------
# boundary traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceTrace:
    axis: int
    side: str  # "lo" | "hi"
    values: np.ndarray  # shape n_without_axis + (dim,)
    area_weight: float


@dataclass
class BoundaryTrace:
    space: SpaceDescriptor
    faces: list[FaceTrace]


def trace_boundary(u: GridFunction) -> BoundaryTrace:
    """Linear extrapolation of u to each face from the two nearest layers."""
    d = u.domain.d
    h = u.grid.spacing(u.domain)
    faces = []
    for j in range(d):
        if u.grid.n[j] < 2:
            raise GridError("trace extrapolation needs two layers per axis")
        area = float(np.prod(np.delete(h, j))) if d > 1 else 1.0
        first = u.values[_axis_slices(d, j, slice(0, 1))]
        second = u.values[_axis_slices(d, j, slice(1, 2))]
        lo_vals = (1.5 * first - 0.5 * second).squeeze(axis=j)
        last = u.values[_axis_slices(d, j, slice(-1, None))]
        prev = u.values[_axis_slices(d, j, slice(-2, -1))]
        hi_vals = (1.5 * last - 0.5 * prev).squeeze(axis=j)
        faces.append(FaceTrace(j, "lo", lo_vals, area))
        faces.append(FaceTrace(j, "hi", hi_vals, area))
    return BoundaryTrace(space=u.space, faces=faces)


def boundary_lp_norm(trace: BoundaryTrace, p: float) -> float:
    """(d-1)-dimensional quadrature of the pointwise value-space norms."""
    if math.isinf(p):
        return max(
            float(np.max(np.asarray(banach.norm(trace.space, f.values))))
            for f in trace.faces
        )
    total = 0.0
    for f in trace.faces:
        g = np.asarray(banach.norm(trace.space, f.values))
        total += float(np.sum(g**p) * f.area_weight)
    return total ** (1.0 / p)


# ---------------------------------------------------------------------------
# functional pairings
# ---------------------------------------------------------------------------


def apply_functional(u: GridFunction, functional) -> GridFunction:
    """Scalar grid function xi -> <u(xi), functional>."""
    c = banach.pairing_vector(u.space, functional)
    scal = u.values @ c
    return from_scalar(u.domain, u.grid, scal)
