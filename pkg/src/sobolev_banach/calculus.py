"""Difference-quotient calculus for vector-valued grid functions.

The operations here turn the qualitative statements (difference-quotient
membership criterion, Lipschitz composition, one-sided chain rules, lattice
chain rules, disjoint-support preservation, quotient and product rules,
Hölder seminorms) into measurable quantities on a grid, each with a report
recording what was compared and how well it agreed.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, banach
from .banach import PAIR_TOL, SpaceDescriptor, scalar_space
from .errors import (
    CapabilityError,
    ContractError,
    DimensionMismatchError,
    OrderContinuityError,
)
from .gridfn import (
    DerivativeField,
    GridFunction,
    finite_difference,
    from_scalar,
    grid_centers,
    interior_mask,
    pointwise_norms,
    shift_difference_norm,
)
from .reports import ConsistencyReport, fit_loglog, to_jsonable, write_csv_rows

ZERO_TOL = banach.ZERO_TOL

#: DIVERGENT requires a log-log slope below this with a tight fit
DIVERGENCE_SLOPE = -0.1
#: ... over at least this many step sizes with at least this R^2
DIVERGENCE_MIN_STEPS = 4
DIVERGENCE_MIN_R2 = 0.99


# ---------------------------------------------------------------------------
# difference-quotient membership criterion
# ---------------------------------------------------------------------------


@dataclass
class CriterionReport:
    """Shift-quotient table with the fitted verdict.

    rows: (direction j, steps, h, quotient) with
    quotient = |u(.+ steps*h_j e_j) - u|_{L^p(omega)} / (steps*h_j).
    ``c_est`` is the largest quotient (the best lower bound for the
    directional-derivative norm maximum); the slope/residual belong to the
    most divergent direction's log-log fit.
    """

    p: float
    rows: list[tuple[int, int, float, float]]
    c_est: float
    slope: float
    residual: float
    verdict: str
    per_direction: dict = field(default_factory=dict)

    @property
    def divergent(self) -> bool:
        return self.verdict == "DIVERGENT"

    def to_json(self) -> str:
        return json.dumps(to_jsonable(self), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        return write_csv_rows(["h", "value"], [[r[2], r[3]] for r in self.rows])


def dq_criterion(
    u: GridFunction, p: float, steps_list: tuple[int, ...] = (1, 2, 4, 8, 16)
) -> CriterionReport:
    """Bounded-shift-quotient test for Sobolev membership.

    A function with an L^p derivative field has quotients bounded by
    max_j |D_j u|_{L^p}; quotients blowing up like a negative power of h
    certify non-membership.  DIVERGENT requires slope < -0.1 with R^2 >=
    0.99 over at least 4 step sizes (in some direction).
    """
    steps_list = tuple(sorted(set(int(s) for s in steps_list)))
    if any(s < 1 for s in steps_list):
        raise ValueError("steps must be positive")
    h = u.grid.spacing(u.domain)
    rows = []
    per_direction: dict[int, dict] = {}
    slope, r2 = math.nan, 0.0
    verdict = "BOUNDED"
    for j in range(u.domain.d):
        usable = [s for s in steps_list if s < u.grid.n[j]]
        hs, qs = [], []
        for s in usable:
            hh = s * h[j]
            q = shift_difference_norm(u, j, s, p) / hh
            rows.append((j, s, float(hh), float(q)))
            hs.append(hh)
            qs.append(q)
        hs = np.asarray(hs)
        qs = np.asarray(qs)
        pos = qs > 0.0
        if pos.sum() >= 2:
            sj, rj = fit_loglog(hs[pos], qs[pos])
        else:
            sj, rj = 0.0, 1.0
        per_direction[j] = {"slope": sj, "r2": rj, "n_steps": int(pos.sum())}
        if math.isnan(slope) or sj < slope:
            slope, r2 = sj, rj
            if (
                sj < DIVERGENCE_SLOPE
                and rj >= DIVERGENCE_MIN_R2
                and pos.sum() >= DIVERGENCE_MIN_STEPS
            ):
                verdict = "DIVERGENT"
    c_est = max((r[3] for r in rows), default=0.0)
    if math.isnan(slope):
        slope = 0.0
        r2 = 1.0
    return CriterionReport(
        p=p,
        rows=rows,
        c_est=float(c_est),
        slope=float(slope),
        residual=float(r2),
        verdict=verdict,
        per_direction=per_direction,
    )


# ---------------------------------------------------------------------------
# Lipschitz composition
# ---------------------------------------------------------------------------


@dataclass
class LipschitzMap:
    """A Lipschitz map between value spaces, with optional one-sided data.

    ``rule`` maps a single source vector to a target vector; ``rule_batch``
    (optional) maps (N, source.dim) to (N, target.dim) and is preferred.
    ``onesided_batch``, when provided, returns the one-sided directional
    derivative pair (plus, minus), each (N, target.dim), at points X along
    directions V.
    """

    rule: object
    source: SpaceDescriptor
    target: SpaceDescriptor
    L: float
    rule_batch: object = None
    onesided_batch: object = None
    name: str = "F"

    def apply_batch(self, X: np.ndarray) -> np.ndarray:
        if self.rule_batch is not None:
            out = np.asarray(self.rule_batch(X), dtype=np.float64)
        else:
            out = np.stack(
                [np.asarray(self.rule(X[i]), dtype=np.float64) for i in range(len(X))]
            )
        if out.shape != (X.shape[0], self.target.dim):
            raise DimensionMismatchError(
                f"{self.name} returned shape {out.shape}, "
                f"expected {(X.shape[0], self.target.dim)}"
            )
        return out


def norm_lipschitz_map(space: SpaceDescriptor) -> LipschitzMap:
    """The norm of `space` as a 1-Lipschitz scalar map with one-sided data."""

    def _batch(X):
        return np.asarray(banach.norm(space, X))[:, None]

    def _onesided(X, V):
        plus, minus, _ = banach.one_sided_norm_derivative_batch(space, X, V)
        return plus[:, None], minus[:, None]

    return LipschitzMap(
        rule=lambda x: np.array([banach.norm(space, x)]),
        rule_batch=_batch,
        onesided_batch=_onesided,
        source=space,
        target=scalar_space(),
        L=1.0,
        name="norm",
    )


def validate_lipschitz(
    F: LipschitzMap, u: GridFunction, rng: np.random.Generator, pairs: int = 10_000
) -> float:
    """Empirical Lipschitz quotient of F over seeded node-value pairs.

    Raises with the witness pair when the quotient exceeds L*(1+1e-9).
    """
    X = u.values.reshape(-1, u.space.dim)
    n = X.shape[0]
    ii = rng.integers(0, n, size=pairs)
    jj = rng.integers(0, n, size=pairs)
    keep = ii != jj
    ii, jj = ii[keep], jj[keep]
    a, b = X[ii], X[jj]
    dx = np.asarray(banach.norm(F.source, a - b))
    nz = dx > 0.0
    ii, jj, a, b, dx = ii[nz], jj[nz], a[nz], b[nz], dx[nz]
    dy = np.asarray(banach.norm(F.target, F.apply_batch(a) - F.apply_batch(b)))
    quot = dy / dx
    worst = int(np.argmax(quot))
    qmax = float(quot[worst])
    if qmax > F.L * (1.0 + 1e-9):
        raise ContractError(
            f"{F.name} violates its Lipschitz constant {F.L}: quotient {qmax} "
            f"between node values #{ii[worst]} and #{jj[worst]} "
            f"({a[worst]!r} vs {b[worst]!r})"
        )
    return qmax


def compose_lipschitz(
    F: LipschitzMap,
    u: GridFunction,
    rng: np.random.Generator | None = None,
    validation_pairs: int = 10_000,
) -> tuple[GridFunction, ConsistencyReport]:
    """F composed with u, plus the difference-quotient bound report.

    The composed field's difference quotients are bounded by L times the
    quotients of u at every node (same two sample points on both sides), so
    the recorded excess should sit at rounding level.
    """
    if u.space.to_dict() != F.source.to_dict():
        raise DimensionMismatchError("u does not live in F's source space")
    rng = rng if rng is not None else np.random.default_rng(0)
    qmax = validate_lipschitz(F, u, rng, validation_pairs)
    flat = F.apply_batch(u.values.reshape(-1, u.space.dim))
    v = GridFunction(
        u.domain, u.grid, F.target, flat.reshape(u.grid.n + (F.target.dim,))
    )
    du = finite_difference(u)
    dv = finite_difference(v)
    max_excess = 0.0
    h = u.grid.spacing(u.domain)
    for j in range(u.domain.d):
        lhs = np.asarray(banach.norm(F.target, dv[j].values))
        rhs = F.L * np.asarray(banach.norm(u.space, du[j].values))
        max_excess = max(max_excess, float(np.max(lhs - rhs)))
    scale = 1.0 + F.L * max(
        float(np.max(np.asarray(banach.norm(u.space, du[j].values))))
        for j in range(u.domain.d)
    )
    tol = 1e-9 * scale
    report = ConsistencyReport(
        name=f"compose_lipschitz[{F.name}]",
        table=[("max_excess", max_excess), ("empirical_quotient", qmax)],
        verdict="PASS" if max_excess <= tol else "FAIL",
        details={
            "L": F.L,
            "tolerance": tol,
            "max_excess_over_h": max_excess / float(np.min(h)),
        },
    )
    return v, report


# ---------------------------------------------------------------------------
# one-sided chain rule fields
# ---------------------------------------------------------------------------


@dataclass
class ChainRuleField:
    """Plus/minus one-sided chain-rule fields with the agreement report."""

    plus: list[GridFunction]
    minus: list[GridFunction]
    report: ConsistencyReport


def gateaux_chain_field(
    F: LipschitzMap, u: GridFunction, p: float = 2.0
) -> ChainRuleField:
    """Nodewise one-sided derivatives of F along the difference-quotient
    derivative directions of u, compared against the direct quotients of
    F(u).

    The almost-everywhere equality of the two one-sided fields shows up
    discretely as a plus/minus gap whose p-norm (per unit measure) shrinks
    under refinement; both fields are also compared with
    finite_difference(F(u)) away from non-unique and boundary nodes.
    """
    if F.onesided_batch is None:
        raise CapabilityError(f"{F.name} carries no one-sided derivative data")
    if u.space.to_dict() != F.source.to_dict():
        raise DimensionMismatchError("u does not live in F's source space")
    X = u.values.reshape(-1, u.space.dim)
    du = finite_difference(u)
    v = GridFunction(
        u.domain,
        u.grid,
        F.target,
        F.apply_batch(X).reshape(u.grid.n + (F.target.dim,)),
    )
    dv = finite_difference(v)
    vol = float(np.prod(u.grid.spacing(u.domain)))
    inner = interior_mask(u.grid).ravel()
    plus_fields, minus_fields = [], []
    table = []
    details: dict = {"directions": {}}
    for j in range(u.domain.d):
        V = du[j].values.reshape(-1, u.space.dim)
        plus, minus = F.onesided_batch(X, V)
        plus = np.asarray(plus, dtype=np.float64)
        minus = np.asarray(minus, dtype=np.float64)
        plus_fields.append(
            GridFunction(u.domain, u.grid, F.target, plus.reshape(v.values.shape))
        )
        minus_fields.append(
            GridFunction(u.domain, u.grid, F.target, minus.reshape(v.values.shape))
        )
        gap = np.asarray(banach.norm(F.target, plus - minus))
        dnorm = np.asarray(banach.norm(u.space, V))
        unique = gap <= PAIR_TOL * (1.0 + dnorm)
        gap_lp = _lp_of(gap, vol, p)
        frac = float(np.mean(~unique))
        fd = dv[j].values.reshape(-1, F.target.dim)
        ok = unique & inner
        err_plus = _lp_of(
            np.asarray(banach.norm(F.target, plus - fd))[ok], vol, p
        )
        err_minus = _lp_of(
            np.asarray(banach.norm(F.target, minus - fd))[ok], vol, p
        )
        table.append((f"pm_gap_lp[{j}]", gap_lp))
        table.append((f"fd_err[{j}]", max(err_plus, err_minus)))
        details["directions"][j] = {
            "pm_gap_lp": gap_lp,
            "nonunique_fraction": frac,
            "err_plus": err_plus,
            "err_minus": err_minus,
        }
    report = ConsistencyReport(
        name=f"gateaux_chain[{F.name}]", table=table, verdict="PASS", details=details
    )
    return ChainRuleField(plus=plus_fields, minus=minus_fields, report=report)


def _lp_of(g: np.ndarray, vol: float, p: float) -> float:
    if g.size == 0:
        return 0.0
    if math.isinf(p):
        return float(np.max(g))
    return float((np.sum(np.abs(g) ** p) * vol) ** (1.0 / p))


# ---------------------------------------------------------------------------
# derivative of the pointwise norm
# ---------------------------------------------------------------------------


@dataclass
class NormDerivativeResult:
    """Scalar fields D_j|u(.)|_X with flags and the consistency report.

    Flagged nodes (non-unique pairing, or |u| at/near zero) store the
    midpoint of the one-sided interval and are excluded from every check;
    exact zeros store the conventional value 0.
    """

    fields: list[GridFunction]
    flags: list[np.ndarray]
    intervals: list[tuple[np.ndarray, np.ndarray]]
    report: ConsistencyReport


def norm_derivative_field(u: GridFunction) -> NormDerivativeResult:
    """Chain-rule field of the norm map along each axis.

    Values come from the extreme norming-functional pairing against the
    difference-quotient derivative of u; the report compares them with the
    direct difference quotients of the scalar pointwise-norm function in
    the discrete L^1 norm over non-flagged interior nodes, and records the
    worst nodewise excess of |D_j|u|| over |D_j u|_X.
    """
    du = finite_difference(u)
    X = u.values.reshape(-1, u.space.dim)
    nx = np.asarray(banach.norm(u.space, X))
    near_zero = nx <= ZERO_TOL * (1.0 + nx)
    exact_zero = nx == 0.0
    g = from_scalar(u.domain, u.grid, pointwise_norms(u))
    dg = finite_difference(g)
    vol = float(np.prod(u.grid.spacing(u.domain)))
    inner = interior_mask(u.grid).ravel()
    fields, flags, intervals = [], [], []
    table = []
    err_total = 0.0
    max_margin = -math.inf
    for j in range(u.domain.d):
        V = du[j].values.reshape(-1, u.space.dim)
        plus, minus, unique = banach.one_sided_norm_derivative_batch(u.space, X, V)
        value = np.where(unique, plus, 0.5 * (plus + minus))
        value = np.where(exact_zero, 0.0, value)
        flagged = (~unique) | near_zero
        fields.append(from_scalar(u.domain, u.grid, value.reshape(u.grid.n)))
        flags.append(flagged.reshape(u.grid.n))
        intervals.append((plus.reshape(u.grid.n), minus.reshape(u.grid.n)))
        ok = (~flagged) & inner
        fdj = dg[j].values.reshape(-1)
        err = float(np.sum(np.abs(value - fdj)[ok]) * vol)
        err_total += err
        dnorm = np.asarray(banach.norm(u.space, V))
        if np.any(~flagged):
            margin = float(np.max((np.abs(value) - dnorm)[~flagged]))
            rel = float(
                np.max(((np.abs(value) - dnorm) / (1.0 + dnorm))[~flagged])
            )
            max_margin = max(max_margin, rel)
        table.append((f"l1_err[{j}]", err))
        table.append((f"flagged_fraction[{j}]", float(np.mean(flagged))))
    report = ConsistencyReport(
        name="norm_derivative_field",
        table=table,
        verdict="PASS",
        details={
            "l1_err_total": err_total,
            "max_norm_estimate_margin": max_margin,
            "cell_volume": vol,
        },
    )
    return NormDerivativeResult(
        fields=fields, flags=flags, intervals=intervals, report=report
    )


# ---------------------------------------------------------------------------
# lattice chain rules: modulus and positive part
# ---------------------------------------------------------------------------


@dataclass
class LatticeDerivativeResult:
    fields: list[GridFunction]
    flags: list[np.ndarray]
    report: ConsistencyReport


def _require_order_continuous(space: SpaceDescriptor, what: str):
    if not space.lattice_capable:
        raise CapabilityError(f"{space.kind} carries no lattice order for {what}")
    if not space.order_continuous:
        raise OrderContinuityError(
            f"{what} needs an order continuous norm; the sup norm of "
            f"{space.kind} is the standard failure"
        )


def _lattice_field(u: GridFunction, kind: str) -> LatticeDerivativeResult:
    _require_order_continuous(u.space, f"{kind}_derivative_field")
    du = finite_difference(u)
    U = u.values
    nx = np.asarray(banach.norm(u.space, U))
    tau = ZERO_TOL * (1.0 + nx)[..., None]
    node_flag = np.any(np.abs(U) <= tau, axis=-1)
    if kind == "abs":
        target = u.like(np.abs(U))
    else:
        target = u.like(np.maximum(U, 0.0))
    dt = finite_difference(target)
    vol = float(np.prod(u.grid.spacing(u.domain)))
    inner = interior_mask(u.grid)
    fields, flags, table = [], [], []
    err_total = 0.0
    for j in range(u.domain.d):
        D = du[j].values
        if kind == "abs":
            vals = np.sign(U) * D
        else:
            vals = np.where(U > 0.0, D, 0.0)
        fields.append(u.like(vals))
        flags.append(node_flag)
        ok = (~node_flag) & inner
        err = float(
            np.sum(np.asarray(banach.norm(u.space, vals - dt[j].values))[ok]) * vol
        )
        err_total += err
        table.append((f"l1_err[{j}]", err))
    table.append(("flagged_fraction", float(np.mean(node_flag))))
    report = ConsistencyReport(
        name=f"{kind}_derivative_field",
        table=table,
        verdict="PASS",
        details={"l1_err_total": err_total},
    )
    return LatticeDerivativeResult(fields=fields, flags=flags, report=report)


def abs_derivative_field(u: GridFunction) -> LatticeDerivativeResult:
    """Modulus chain rule D_j|u| = (sign u) D_j u, checked against the direct
    difference quotients of |u|; requires an order continuous lattice norm."""
    return _lattice_field(u, "abs")


def pos_derivative_field(u: GridFunction) -> LatticeDerivativeResult:
    """Positive-part chain rule D_j u+ = 1_{u>0} D_j u (band projection onto
    the support of u+), same hypotheses and comparison as the modulus rule."""
    return _lattice_field(u, "pos")


# ---------------------------------------------------------------------------
# disjoint supports are preserved by differentiation
# ---------------------------------------------------------------------------


def stampacchia_check(u: GridFunction, w) -> ConsistencyReport:
    """|u| ∧ w = 0 forces |D_j u| ∧ w = 0.

    The precondition is checked at every node within the zero tolerance;
    the derivative-side tolerance scales like tau/h since the quotients
    difference values that vanish on the support of w.
    """
    if not u.space.lattice_capable:
        raise CapabilityError(f"{u.space.kind} carries no lattice order")
    w = banach.check_vec(u.space, w)
    if np.any(w < 0.0):
        raise ContractError("w must be a positive element")
    U = u.values
    nx = np.asarray(banach.norm(u.space, U))
    tau = ZERO_TOL * (1.0 + float(np.max(nx, initial=0.0)))
    pre = np.minimum(np.abs(U), w)
    pre_max = float(np.max(pre))
    if pre_max > tau:
        idx = np.unravel_index(int(np.argmax(pre.max(axis=-1).ravel())), u.grid.n)
        raise ContractError(
            f"|u| ∧ w is not zero: value {pre_max} at node {idx} exceeds {tau}"
        )
    du = finite_difference(u)
    hmin = float(np.min(u.grid.spacing(u.domain)))
    tol = 4.0 * tau / hmin
    worst = 0.0
    witness = None
    for j in range(u.domain.d):
        viol = np.minimum(np.abs(du[j].values), w)
        m = float(np.max(viol))
        if m > worst:
            worst = m
            witness = (j, np.unravel_index(int(np.argmax(viol.max(axis=-1).ravel())), u.grid.n))
    return ConsistencyReport(
        name="stampacchia_check",
        table=[("precondition_max", pre_max), ("derivative_max", worst)],
        verdict="PASS" if worst <= tol else "FAIL",
        details={"tolerance": tol, "witness": witness},
    )


# ---------------------------------------------------------------------------
# quotient rule for the radial retraction, product rule
# ---------------------------------------------------------------------------


@dataclass
class QuotientRuleResult:
    v: GridFunction
    fields: list[GridFunction]
    report: ConsistencyReport


def quotient_rule_field(u: GridFunction, phi_hat: GridFunction) -> QuotientRuleResult:
    """Derivative field of v = (u/|u|) * (phi_hat ∧ |u|), zero on {u = 0}.

    D_j v = ((D_j u)|u| - u D_j|u|)/|u|^2 * phi + (u/|u|) D_j phi away from
    the zero set, with D_j|u| taken from norm_derivative_field; the report
    compares against the direct quotients of v off {|u| <= tau_zero}.
    """
    if phi_hat.space.dim != 1:
        raise DimensionMismatchError("phi_hat must be a scalar grid function")
    if np.any(phi_hat.values < 0.0):
        raise ContractError("phi_hat must be nonnegative")
    g = pointwise_norms(u)
    phi = np.minimum(phi_hat.values[..., 0], g)
    safe = g > ZERO_TOL * (1.0 + g)
    inv = np.where(safe, 1.0 / np.where(safe, g, 1.0), 0.0)
    v_vals = u.values * (phi * inv)[..., None]
    v = u.like(v_vals)

    du = finite_difference(u)
    nd = norm_derivative_field(u)
    dphi = finite_difference(from_scalar(u.domain, u.grid, phi))
    dv = finite_difference(v)
    vol = float(np.prod(u.grid.spacing(u.domain)))
    inner = interior_mask(u.grid)
    fields, table = [], []
    err_total = 0.0
    for j in range(u.domain.d):
        dnorm = nd.fields[j].values[..., 0]
        numer = du[j].values * g[..., None] - u.values * dnorm[..., None]
        formula = numer * (inv**2 * phi)[..., None] + (
            u.values * inv[..., None]
        ) * dphi[j].values
        formula = np.where(safe[..., None], formula, 0.0)
        fields.append(u.like(formula))
        ok = safe & (~nd.flags[j]) & inner
        err = float(
            np.sum(np.asarray(banach.norm(u.space, formula - dv[j].values))[ok]) * vol
        )
        err_total += err
        table.append((f"l1_err[{j}]", err))
    report = ConsistencyReport(
        name="quotient_rule_field",
        table=table,
        verdict="PASS",
        details={"l1_err_total": err_total, "zero_fraction": float(np.mean(~safe))},
    )
    return QuotientRuleResult(v=v, fields=fields, report=report)


def product_rule_check(u: GridFunction, psi: GridFunction) -> ConsistencyReport:
    """D_j(psi u) = (D_j psi) u + psi D_j u, compared in the Bochner 1-norm
    at interior nodes (central differences make the defect O(h) for C^1
    scalar factors)."""
    if psi.space.dim != 1:
        raise DimensionMismatchError("psi must be a scalar grid function")
    prod = u.like(u.values * psi.values)
    dprod = finite_difference(prod)
    du = finite_difference(u)
    dpsi = finite_difference(psi)
    vol = float(np.prod(u.grid.spacing(u.domain)))
    inner = interior_mask(u.grid)
    h = u.grid.spacing(u.domain)
    table = []
    err_max = 0.0
    for j in range(u.domain.d):
        rhs = dpsi[j].values * u.values + psi.values * du[j].values
        err = float(
            np.sum(np.asarray(banach.norm(u.space, dprod[j].values - rhs))[inner])
            * vol
        )
        table.append((float(h[j]), err))
        err_max = max(err_max, err)
    return ConsistencyReport(
        name="product_rule_check",
        table=table,
        verdict="PASS",
        details={"err_max": err_max, "err_max_over_h": err_max / float(np.min(h))},
    )


# ---------------------------------------------------------------------------
# Hölder seminorm over the grid
# ---------------------------------------------------------------------------


def holder_beta(
    u: GridFunction,
    alpha: float,
    max_nodes: int | None = None,
    seed: int = 0,
) -> float:
    """sup over node pairs of |u(xi)-u(eta)|_X / |xi-eta|^alpha.

    Exact over all pairs by default (O(N^2) in the node count); pass
    ``max_nodes`` to evaluate on a seeded deterministic subsample.
    """
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    P = grid_centers(u.domain, u.grid).reshape(-1, u.domain.d)
    V = u.values.reshape(-1, u.space.dim)
    if max_nodes is not None and P.shape[0] > max_nodes:
        rng = np.random.default_rng(seed)
        idx = np.sort(rng.choice(P.shape[0], size=max_nodes, replace=False))
        P, V = P[idx], V[idx]
    rcode = -1.0 if u.space.sup_like else float(u.space.exponent)
    w = u.space.weights if u.space.weights is not None else np.ones(u.space.dim)
    return _kernels.holder_max(V, P, float(alpha), rcode, w)
