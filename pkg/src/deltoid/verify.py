"""Registry of numeric invariant checks and the runner behind ``deltoid verify``.

Each check returns its worst residual; it passes when the residual is at most
the registered tolerance.  Checks draw from their own generator, seeded from
the run seed and the check name, so results do not depend on run order.
"""

from __future__ import annotations

import cmath
import math
import zlib
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import core, power_map, special_loci, triangle
from .core import TOL_GEOM, TOL_ON, angle_gap_mod_pi, deltoid_eval, normalize_angle
from .oracles import foot_by_projection, mobius_cubic_roots, newton_zero_search

OMEGA = core.OMEGA


@dataclass
class VerifyConfig:
    seed: int = 0
    samples: int = 1000
    tol_override: float | None = None
    only: list[str] | None = None


@dataclass
class Context:
    rng: np.random.Generator
    samples: int

    def count(self, full: int) -> int:
        """Scale a default sample count (stated for samples=1000)."""
        return max(4, int(round(full * self.samples / 1000)))


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float
    tolerance: float


@dataclass
class RunReport:
    rows: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [asdict(r) for r in self.rows]}

    def format(self) -> str:
        width = max((len(r.name) for r in self.rows), default=10)
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  "
            f"residual={r.residual:.3e}  tol={r.tolerance:.1e}"
            for r in self.rows
        ]
        ok = sum(r.passed for r in self.rows)
        lines.append(f"{ok}/{len(self.rows)} checks passed")
        return "\n".join(lines)


REGISTRY: dict[str, tuple[float, Callable[[Context], float]]] = {}


def check(name: str, tol: float):
    def deco(fn):
        if name in REGISTRY:
            raise ValueError(f"duplicate check {name}")
        REGISTRY[name] = (tol, fn)
        return fn

    return deco


def make_context(name: str, seed: int, samples: int) -> Context:
    return Context(np.random.default_rng([seed, zlib.crc32(name.encode())]), samples)


def run_check(name: str, seed: int = 0, samples: int = 1000) -> float:
    _, fn = REGISTRY[name]
    return float(fn(make_context(name, seed, samples)))


def run(config: VerifyConfig = VerifyConfig()) -> RunReport:
    report = RunReport()
    for name, (tol, _) in REGISTRY.items():
        if config.only and not any(name.startswith(p) for p in config.only):
            continue
        resid = run_check(name, config.seed, config.samples)
        if config.tol_override is not None:
            tol = config.tol_override
        report.rows.append(CheckResult(name, bool(resid <= tol), resid, tol))
    return report


# -- sampling helpers ---------------------------------------------------------


def random_angles(rng: np.random.Generator, k: int) -> np.ndarray:
    return rng.uniform(-math.pi, math.pi, k)


def random_inside(rng: np.random.Generator, k: int) -> list[complex]:
    out: list[complex] = []
    while len(out) < k:
        r = 3 * np.sqrt(rng.uniform(0, 1, 4 * k))
        phi = rng.uniform(-math.pi, math.pi, 4 * k)
        z = r * np.exp(1j * phi)
        z = z[core.deltoid_eval_array(z) < 0]
        out.extend(complex(v) for v in z)
    return out[:k]


def random_triangles(
    rng: np.random.Generator, k: int, min_gap: float = 0.0
) -> list[triangle.AmenableTriangle]:
    out = []
    while len(out) < k:
        phi1, phi2 = random_angles(rng, 2)
        t = triangle.AmenableTriangle.from_angles(phi1, phi2)
        if t.min_gap > min_gap:
            out.append(t)
    return out


def hausdorff(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


# -- deltoid core ---------------------------------------------------------------


@check("core.curve_identity", 1e-9)
def _(ctx):
    th = np.linspace(-math.pi, math.pi, ctx.count(10_000))
    return max(abs(deltoid_eval(core.parametrize(t))) for t in th)


@check("core.period", 1e-14)
def _(ctx):
    th = random_angles(ctx.rng, ctx.count(1000))
    return max(
        abs(core.parametrize(normalize_angle(t + 2 * math.pi)) - core.parametrize(normalize_angle(t)))
        for t in th
    )


@check("core.angle_normalization", 0.0)
def _(ctx):
    th = ctx.rng.uniform(-50, 50, ctx.count(1000))
    bad = 0.0
    for t in th:
        a = normalize_angle(t)
        bad = max(bad, abs(normalize_angle(a) - a), 0.0 if -math.pi < a <= math.pi else 1.0)
    return bad


@check("core.conjugation_symmetry", 0.0)
def _(ctx):
    z = random_disk(ctx.rng, ctx.count(1000), 4.0)
    return max(abs(deltoid_eval(v.conjugate()) - deltoid_eval(v)) for v in z)


@check("core.threefold_symmetry", 1e-9)
def _(ctx):
    z = random_disk(ctx.rng, ctx.count(1000), 4.0)
    return max(abs(deltoid_eval(OMEGA * v) - deltoid_eval(v)) for v in z)


def random_disk(rng, k: int, radius: float) -> list[complex]:
    r = radius * np.sqrt(rng.uniform(0, 1, k))
    return [complex(v) for v in r * np.exp(1j * rng.uniform(-math.pi, math.pi, k))]


@check("core.tangency_substitution", TOL_GEOM)
def _(ctx):
    th = random_angles(ctx.rng, ctx.count(1000))
    return max(abs(core.tangency_point(t) - core.parametrize(normalize_angle(-2 * t))) for t in th)


@check("core.needle_length", TOL_GEOM)
def _(ctx):
    return max(abs(core.needle(t).length - 4) for t in random_angles(ctx.rng, ctx.count(1000)))


@check("core.needle_midpoint_unit", TOL_GEOM)
def _(ctx):
    return max(abs(abs(core.needle(t).midpoint) - 1) for t in random_angles(ctx.rng, ctx.count(1000)))


@check("core.needle_tangency_lambda", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t in random_angles(ctx.rng, ctx.count(1000)):
        nd = core.needle(t)
        lam = nd.tangency_lambda
        off = nd.line.distance(nd.tangency)
        worst = max(worst, abs(lam - math.cos(3 * t)), off)
    return worst


@check("core.needle_points_on", TOL_ON)
def _(ctx):
    worst = 0.0
    for t in random_angles(ctx.rng, ctx.count(1000)):
        nd = core.needle(t)
        worst = max(worst, *(abs(deltoid_eval(p)) for p in (nd.end_plus, nd.end_minus, nd.tangency)))
    return worst


def _intersection_pairs(ctx):
    for t1, t2 in zip(random_angles(ctx.rng, ctx.count(1000)), random_angles(ctx.rng, ctx.count(1000))):
        if abs(math.sin(t1 - t2)) > 1e-6:
            yield t1, t2, core.tangent_intersection(t1, t2)


@check("core.tangent_intersection_lambda", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t1, t2, (_, l1, l2) in _intersection_pairs(ctx):
        worst = max(worst, abs(l1 - math.cos(t1 + 2 * t2)), abs(l2 - math.cos(2 * t1 + t2)))
    return worst


@check("core.tangent_intersection_point", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t1, t2, (p, _, _) in _intersection_pairs(ctx):
        ref = 2 * math.cos(t1 + 2 * t2) * cmath.exp(1j * t1) + cmath.exp(-2j * t1)
        worst = max(worst, abs(p - ref))
    return worst


@check("core.tangent_intersection_closed", TOL_ON)
def _(ctx):
    return max(0.0, max(deltoid_eval(p) for _, _, (p, _, _) in _intersection_pairs(ctx)))


@check("core.tangent_line_separation", 0.0)
def _(ctx):
    bad = 0
    for t in np.linspace(-math.pi, math.pi, ctx.count(1000), endpoint=False):
        tl = core.tangent_line(t)
        for lam in (1.5, -1.5, 3.0, -3.0):
            bad += core.classify(tl.at(lam)).verdict is not core.Verdict.OUTSIDE
        for lam in (0.0, 0.5, -0.5):
            bad += not core.classify(tl.at(lam)).closed
    return bad


@check("core.frame_perpendicular", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t in random_angles(ctx.rng, ctx.count(1000)):
        f = core.frame(t)
        worst = max(worst, abs((f.line_L.direction * f.line_L_prime.direction.conjugate()).real))
    return worst


@check("core.frame_slope", TOL_GEOM)
def _(ctx):
    # direction of L against the unit vector with slope -tan(theta/2)
    worst = 0.0
    for t in random_angles(ctx.rng, ctx.count(1000)):
        d = core.frame(t).line_L.direction
        ref = complex(math.cos(t / 2), -math.sin(t / 2))
        worst = max(worst, abs((d * ref.conjugate()).imag))
    return worst


@check("core.frame_incidence", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t in random_angles(ctx.rng, ctx.count(1000)):
        f = core.frame(t)
        worst = max(
            worst,
            f.line_L.distance(f.gamma),
            f.line_L.distance(f.beta_prime),
            f.line_L.distance(f.alpha),
            f.line_L_prime.distance(f.gamma_prime),
            f.line_L_prime.distance(f.beta_prime),
            f.line_L_prime.distance(f.alpha_prime),
            abs((f.gamma + f.beta_prime) / 2 - f.alpha),
            abs((f.gamma_prime + f.beta_prime) / 2 - f.alpha_prime),
            abs(f.delta - core.tangency_point(t)),
        )
    return worst


# -- triangles ----------------------------------------------------------------------


@check("triangle.roundtrip_vertices", 1e-7)
def _(ctx):
    worst = 0.0
    for t in random_triangles(ctx.rng, ctx.count(1000)):
        back = triangle.vertices_from_orthocenter(triangle.orthocenter(t))
        worst = max(worst, t.matches(back))
    return worst


@check("triangle.roundtrip_orthocenter", 1e-8)
def _(ctx):
    return max(
        abs(triangle.orthocenter(triangle.vertices_from_orthocenter(h)) - h)
        for h in random_inside(ctx.rng, ctx.count(1000))
    )


@check("triangle.orthocenter_closed", TOL_ON)
def _(ctx):
    return max(
        0.0, max(deltoid_eval(triangle.orthocenter(t)) for t in random_triangles(ctx.rng, ctx.count(1000)))
    )


@check("triangle.discriminant", 1e-9)
def _(ctx):
    worst = 0.0
    for h in random_disk(ctx.rng, ctx.count(1000), 4.0):
        disc = triangle.cubic_discriminant(-h, h.conjugate(), -1)
        ref = deltoid_eval(h)
        worst = max(worst, abs(disc - ref) / max(1.0, abs(ref)))
    return worst


@check("triangle.mobius_oracle", 1e-7)
def _(ctx):
    worst = 0.0
    for h in random_inside(ctx.rng, ctx.count(300)):
        worst = max(worst, triangle.vertices_from_orthocenter(h).matches(mobius_cubic_roots(h)))
    return worst


@check("triangle.boundary_degeneracy", 1e-5)
def _(ctx):
    return max(
        triangle.vertices_from_orthocenter(core.parametrize(t)).min_gap
        for t in np.linspace(-math.pi, math.pi, ctx.count(1000))
    )


@check("triangle.large_triangle", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t in random_triangles(ctx.rng, ctx.count(200), min_gap=1e-3):
        h = triangle.orthocenter(t)
        big = triangle.large_triangle(t)
        center, radius = triangle.circumcircle(*big)
        # orthocenter of a triangle with circumcenter c is the vertex sum minus 2c
        ortho = sum(big) - 2 * center
        nine_center = (center + ortho) / 2
        worst = max(
            worst,
            abs(center + h),
            abs(radius - 2),
            abs(ortho - h),
            abs(nine_center),
            max(abs(abs((big[i] + big[(i + 1) % 3]) / 2 - nine_center) - 1) for i in range(3)),
        )
    return worst


@check("triangle.reflected_product", 1e-12)
def _(ctx):
    return max(
        abs(math.prod(triangle.reflected_triangle(t)) + 1)
        for t in random_triangles(ctx.rng, ctx.count(200))
    )


@check("triangle.altitude_tangency", 1e-6)
def _(ctx):
    worst = 0.0
    for t in random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3):
        worst = max(worst, *(d["min_abs_eval"] for d in triangle.altitude_tangency(t)))
    return worst


@check("triangle.altitude_tangent_offset", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t in random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3):
        worst = max(worst, *(d["tangent_offset"] for d in triangle.altitude_tangency(t)))
    return worst


@check("triangle.altitude_concurrency", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t in random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3):
        h = triangle.orthocenter(t)
        worst = max(worst, *(line.distance(h) for line in triangle.altitude_lines(t)))
    return worst


@check("triangle.simson_foot_projection", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t, th in zip(random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3), random_angles(ctx.rng, ctx.count(100))):
        big = triangle.large_triangle(t)
        eps = 2 * cmath.exp(1j * th) - triangle.orthocenter(t)
        for j in range(3):
            ref = foot_by_projection(eps, big[(j + 1) % 3], big[(j + 2) % 3])
            worst = max(worst, abs(triangle.simson_foot(t, j, th) - ref))
    return worst


@check("triangle.simson_collinear", 1e-8)
def _(ctx):
    worst = 0.0
    for t, th in zip(random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3), random_angles(ctx.rng, ctx.count(100))):
        feet = [triangle.simson_foot(t, j, th) for j in range(3)]
        worst = max(worst, triangle.fit_line(feet)[1])
    return worst


@check("triangle.simson_matches_L", 1e-8)
def _(ctx):
    worst = 0.0
    for t, th in zip(random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3), random_angles(ctx.rng, ctx.count(100))):
        line, _ = triangle.simson_line_check(t, th)
        worst = max(worst, *triangle.line_mismatch(line, core.frame(th).line_L))
    return worst


@check("triangle.isogonal_direction", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t, th in zip(random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3), random_angles(ctx.rng, ctx.count(100))):
        worst = max(worst, angle_gap_mod_pi(triangle.isogonal_direction_line(t, th).angle, th))
    return worst


@check("triangle.isogonal_through_point", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for t, th in zip(random_triangles(ctx.rng, ctx.count(100), min_gap=1e-3), random_angles(ctx.rng, ctx.count(100))):
        line = triangle.isogonal_direction_line(t, th)
        target = cmath.exp(1j * (2 * th - cmath.phase(t.vertices[2])))
        worst = max(worst, line.distance(target))
    return worst


def _needle_samples(ctx):
    for th, lam in zip(random_angles(ctx.rng, ctx.count(300)), ctx.rng.uniform(-1, 1, ctx.count(300))):
        yield th, lam, 2 * lam * cmath.exp(1j * th) + cmath.exp(-2j * th)


@check("triangle.needle_vertices_orthocenter", 1e-8)
def _(ctx):
    return max(
        abs(triangle.orthocenter(triangle.needle_vertices(th, lam)) - z)
        for th, lam, z in _needle_samples(ctx)
    )


@check("triangle.needle_vertices_roundtrip", 1e-7)
def _(ctx):
    return max(
        triangle.needle_vertices(th, lam).matches(triangle.vertices_from_orthocenter(z))
        for th, lam, z in _needle_samples(ctx)
    )


# -- power maps ---------------------------------------------------------------------

N_RANGE = range(1, 17)


@check("power.roots_vs_recurrence", 1e-7)
def _(ctx):
    worst = 0.0
    for z in random_inside(ctx.rng, ctx.count(1000)):
        verts = triangle.vertices_from_orthocenter(z).vertices
        for n in N_RANGE:
            worst = max(worst, abs(sum(v**n for v in verts) - power_map.pn_recurrence(z, n)))
    return worst


@check("power.recurrence_vs_closed_form", 1e-10)
def _(ctx):
    worst = 0.0
    for z in random_inside(ctx.rng, ctx.count(1000)):
        for n in N_RANGE:
            worst = max(worst, abs(power_map.pn_recurrence(z, n) - power_map.pn_closed_form(z, n)))
    return worst


def explicit_low_order(z: complex, n: int) -> complex:
    """The hand-expanded p_0..p_5."""
    w = z.conjugate()
    return {
        0: 3,
        1: z,
        2: z**2 - 2 * w,
        3: z**3 - 3 * z * w + 3,
        4: z**4 - 4 * z**2 * w + 2 * w**2 + 4 * z,
        5: z**5 - 5 * z**3 * w + 5 * z * w**2 + 5 * z**2 - 5 * w,
    }[n]


@check("power.explicit_low_order", 1e-10)
def _(ctx):
    worst = 0.0
    for z in random_inside(ctx.rng, ctx.count(100)):
        for n in range(6):
            worst = max(worst, abs(power_map.pn_recurrence(z, n) - explicit_low_order(z, n)))
    return worst


@check("power.rotation_equivariance", 1e-9)
def _(ctx):
    worst = 0.0
    for z in random_inside(ctx.rng, ctx.count(1000)):
        for n in N_RANGE:
            p = power_map.pn_recurrence(z, n)
            for s in (1, -1):
                rot = cmath.exp(s * 2j * math.pi / 3)
                worst = max(worst, abs(power_map.pn_recurrence(rot * z, n) - rot**n * p))
    return worst


@check("power.conjugation", 1e-10)
def _(ctx):
    worst = 0.0
    for z in random_inside(ctx.rng, ctx.count(1000)):
        for n in N_RANGE:
            worst = max(
                worst,
                abs(power_map.pn_recurrence(z.conjugate(), n) - power_map.pn_recurrence(z, n).conjugate()),
            )
    return worst


@check("power.range_containment", TOL_ON)
def _(ctx):
    worst = 0.0
    for z in random_inside(ctx.rng, ctx.count(300)):
        for n in N_RANGE:
            worst = max(worst, deltoid_eval(power_map.pn_via_roots(z, n)))
    return max(worst, 0.0)


@check("power.deltoid_to_deltoid", TOL_ON)
def _(ctx):
    worst = 0.0
    for t in np.linspace(-math.pi, math.pi, ctx.count(300)):
        z = core.parametrize(t)
        for n in N_RANGE:
            worst = max(worst, abs(deltoid_eval(power_map.pn_via_roots(z, n))))
    return worst


def _needle_grid(ctx):
    k = max(4, int(round(100 * math.sqrt(ctx.samples / 1000))))
    for th in np.linspace(-math.pi, math.pi, k):
        for lam in np.linspace(-1, 1, k):
            yield float(th), float(lam)


@check("power.needle_image_vs_roots", 1e-7)
def _(ctx):
    worst = 0.0
    for th, lam in _needle_grid(ctx):
        z = 2 * lam * cmath.exp(1j * th) + cmath.exp(-2j * th)
        verts = triangle.vertices_from_orthocenter(z).vertices
        for n in (1, 2, 3, 5, 8):
            worst = max(worst, abs(power_map.needle_image(th, lam, n) - sum(v**n for v in verts)))
    return worst


@check("power.needle_image_on_needle", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for th, lam in _needle_grid(ctx):
        for n in (1, 2, 3, 5, 8):
            img = power_map.needle_image(th, lam, n)
            tl = core.tangent_line(n * th)
            worst = max(worst, tl.distance(img), max(0.0, abs(tl.coordinate(img) / 2) - 1))
    return worst


# -- special loci ---------------------------------------------------------------------


def _binet(x: float, n: int, fib: bool) -> float:
    r = math.sqrt(x * x + 4)
    a, b = (x + r) / 2, (x - r) / 2
    return (a**n - b**n) / r if fib else a**n + b**n


@check("loci.lucas_fibonacci_closed_form", 1e-9)
def _(ctx):
    worst = 0.0
    for x in ctx.rng.uniform(-2, 2, ctx.count(50)):
        for n in range(0, 31):
            for fib, poly in ((False, special_loci.lucas_poly(n)), (True, special_loci.fibonacci_poly(n))):
                ref = _binet(x, n, fib)
                worst = max(worst, abs(poly(float(x)) - ref) / max(1.0, abs(ref)))
    return worst


@check("loci.q_vs_lucas", 1e-8)
def _(ctx):
    # relative to max(1, |q|): both sides are exact evaluations rounded once
    worst = 0.0
    for A in ctx.rng.uniform(-3, 3, ctx.count(50)):
        A = float(A)
        for n in range(1, 21):
            q = special_loci.q_poly(n)(A)
            via = (-1j) ** n * special_loci.lucas_poly(n)(complex(0, A))
            worst = max(worst, abs(q - via.real) / max(1.0, abs(q)), abs(via.imag) / max(1.0, abs(q)))
    return worst


@check("loci.q_recurrence_derivation", 1e-8)
def _(ctx):
    worst = 0.0
    for A, wa in zip(ctx.rng.uniform(-2, 2, ctx.count(50)), random_angles(ctx.rng, ctx.count(50))):
        w = cmath.exp(1j * wa)
        for n in range(1, 13):
            lhs = w**n * power_map.pn_recurrence(w * w + A / w, n) - w ** (3 * n)
            worst = max(worst, abs(lhs - special_loci.q_poly(n)(float(A))))
    return worst


@check("loci.q_fibonacci_relation", 1e-7)
def _(ctx):
    worst = 0.0
    for A in ctx.rng.uniform(-2, 2, ctx.count(50)):
        A = float(A)
        for n in range(1, 21):
            q = special_loci.q_poly(n)(A)
            f = special_loci.fibonacci_poly(n)(complex(0, A))
            lhs = 4 - q * q
            rhs = (-1) ** n * (A * A - 4) * f * f
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst


@check("loci.lucas_fib_identity", 1e-6)
def _(ctx):
    worst = 0.0
    for x in ctx.rng.uniform(-2, 2, ctx.count(50)):
        for n in range(0, 65):
            scale = max(1.0, special_loci.lucas_poly(n)(float(x)) ** 2)
            worst = max(worst, special_loci.lucas_fib_identity_check(n, float(x)) / scale)
    return worst


@check("loci.factorization", 1e-8)
def _(ctx):
    worst = 0.0
    for B in np.linspace(-3, 3, 13):
        for wa in np.linspace(-math.pi, math.pi, 13):
            for n in range(1, 7):
                worst = max(worst, special_loci.factorization_check(float(B), float(wa), n))
    return worst


@check("loci.fibonacci_roots", 1e-9)
def _(ctx):
    worst = 0.0
    for n in range(1, 21):
        fn = special_loci.fibonacci_poly(n)
        for A in special_loci.fibonacci_A_values(n):
            worst = max(worst, abs(fn(complex(0, A))))
    return worst


@check("loci.preimage_curves", 1e-6)
def _(ctx):
    worst = 0.0
    th = np.linspace(-math.pi, math.pi, ctx.count(1000))
    for n in (2, 3, 5, 12):
        for A in special_loci.valid_amplitudes(n):
            z = special_loci.preimage_curve_point(A, th)
            worst = max(worst, float(np.abs(core.deltoid_eval_array(power_map.pn_recurrence(z, n))).max()))
    return worst


@check("loci.amplitude_count_n12", 0.0)
def _(ctx):
    return abs(len(special_loci.fibonacci_A_values(12)) - 6)


ZERO_NS = range(1, 9)


@check("loci.zero_count", 0.0)
def _(ctx):
    return sum(abs(len(special_loci.zero_locus(n).points) - n * n) for n in ZERO_NS)


@check("loci.zero_residual", 1e-8)
def _(ctx):
    return max(max(special_loci.zero_locus(n).residuals) for n in ZERO_NS)


@check("loci.zero_via_roots", 1e-8)
def _(ctx):
    worst = 0.0
    for n in ZERO_NS:
        for p in special_loci.zero_locus(n).points:
            worst = max(worst, abs(power_map.pn_via_roots(p, n)))
    return worst


@check("loci.zero_needles", TOL_GEOM)
def _(ctx):
    worst = 0.0
    for n in ZERO_NS:
        zl = special_loci.zero_locus(n)
        for k, p in enumerate(zl.points):
            for th in zl.needle_angles(k):
                tl = core.tangent_line(th)
                worst = max(worst, tl.distance(p), max(0.0, abs(tl.coordinate(p) / 2) - 1))
    return worst


@check("loci.zero_index_rules", 0.0)
def _(ctx):
    bad = 0
    for n in ZERO_NS:
        for j1, j2, j3 in special_loci.zero_locus(n).index_triples:
            bad += len({j1 % 3, j2 % 3, j3 % 3}) != 3 or (j1 + j2 + j3) % (3 * n) != 0
    return bad


@check("loci.zero_completeness", 1e-6)
def _(ctx):
    worst = 0.0
    for n in ZERO_NS:
        pts = np.array(special_loci.zero_locus(n).points)
        found = newton_zero_search(n)
        if len(found):
            worst = max(worst, float(np.abs(found[:, None] - pts[None, :]).min(axis=1).max()))
    return worst


@check("loci.zero_oracle_coverage", 0.0)
def _(ctx):
    missed = 0
    for n in ZERO_NS:
        found = newton_zero_search(n)
        for p in special_loci.zero_locus(n).points:
            missed += len(found) == 0 or float(np.abs(found - p).min()) > 1e-6
    return missed


@check("loci.zero_min_gap", 0.0)
def _(ctx):
    return max(0.0, 1e-3 - min(special_loci.zero_locus(n).min_gap for n in range(2, 17)))


@check("loci.zero_rotation_symmetry", 1e-7)
def _(ctx):
    worst = 0.0
    for n in ZERO_NS:
        pts = special_loci.zero_locus(n).points
        worst = max(worst, hausdorff([OMEGA * p for p in pts], pts), hausdorff([p.conjugate() for p in pts], pts))
    return worst
