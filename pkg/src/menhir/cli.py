"""Command-line surface: compose velocities, shift star catalogs, render
cromlech diagrams, run the oracle verification suite, and scan the
velocity/menhir discrepancy.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 superluminal input,
4 I/O error, 5 unsupported rendering dimension.
"""

from __future__ import annotations

import functools
import json
import math
import os
import sys
import warnings

import click
import numpy as np

from .algebra import (
    COMPLEX,
    QUATERNION,
    REAL,
    UnsupportedDimensionError,
    clifford,
    vector_embed,
    vector_part,
)
from .calculus import (
    MoebiusMatrix,
    SuperluminalError,
    compose_menhirs,
    menhir_gap,
    menhir_of,
    moebius_apply,
    refine_gap_argmax,
    thomas_rotation,
    velocity_of,
)
from .lorentz import aberrate_ray, boost_matrix
from .parsing import ElementParseError, format_element, parse_algebra_tag, parse_element, parse_number
from .reversions import (
    ConstructionTrace,
    DegenerateConstructionWarning,
    apply_word,
    boost_star_shift,
    construct_composite_menhir,
    two_boost_fixed_points,
)
from .svgplot import render_starfield
from .verify import CONFIGS, run_equivalence


def _exit_codes(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ElementParseError, UnsupportedDimensionError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except SuperluminalError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)

    return wrapper


@click.group()
def main():
    """Relativistic velocity composition through menhirs.

    Element grammar: rationals ("4/5"), decimals, and unit symbols i, j, k
    ("3i/5", "1/2+i/3"); Clifford vectors as bracketed component lists
    ("[0.1,0.2,0.3]").  Algebra tags: real, complex, quaternion, clifford<N>.
    """


def _parse_velocity(text: str, algebra):
    x = parse_element(text, algebra)
    if algebra.kind == "clifford":
        try:
            vector_part(x, algebra.n_gen, atol=0.0)
        except ValueError as exc:
            raise ElementParseError(f"{text!r} is not a vector velocity") from exc
    if x.norm() >= 1.0 - 1e-12:
        raise SuperluminalError(f"|{text}| = {x.norm()!r} is not strictly below 1")
    return x


def _rotation_payload(descriptor):
    if descriptor.algebra.kind in ("real", "complex"):
        return format_element(descriptor.rho())
    return {
        "alpha": format_element(descriptor.alpha),
        "beta": format_element(descriptor.beta),
    }


@main.command()
@click.option("-a", "--algebra", "tag", default="complex", show_default=True,
              help="Algebra tag: real, complex, quaternion, clifford<N>.")
@click.option("-v", "--velocity", "v_text", required=True, help="First boost velocity.")
@click.option("-w", "--second", "w_text", required=True, help="Second boost velocity.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
@_exit_codes
def compose(tag, v_text, w_text, fmt):
    """Compose two boost velocities (first -v, then -w).

    JSON schema v1 keys: menhir_v, menhir_w, composite_menhir,
    composite_velocity, speed, rotation, angle_rad.
    """
    algebra = parse_algebra_tag(tag)
    v = _parse_velocity(v_text, algebra)
    w = _parse_velocity(w_text, algebra)
    ev, ew = menhir_of(v), menhir_of(w)
    composite = compose_menhirs(ev, ew)
    u = velocity_of(composite)
    rotation = thomas_rotation(ev, ew)
    if algebra.kind == "quaternion":
        pure = abs(v.coeffs[0]) < 1e-12 and abs(w.coeffs[0]) < 1e-12
        model_dim = 3 if pure else 4
    else:
        model_dim = algebra.default_model_dim()
    payload = {
        "menhir_v": format_element(ev),
        "menhir_w": format_element(ew),
        "composite_menhir": format_element(composite),
        "composite_velocity": format_element(u),
        "speed": u.norm(),
        "rotation": _rotation_payload(rotation),
        "angle_rad": rotation.angle(model_dim),
    }
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            click.echo(f"{key} = {value}")


def _algebra_for_dimension(n: int):
    if n == 1:
        return REAL
    if n == 2:
        return COMPLEX
    if n in (3, 4):
        return QUATERNION
    return clifford(n)


def _parse_vector_text(text: str, n: int | None) -> np.ndarray:
    """Velocity as a plain vector; bare element text is read in the division
    algebra matching the dimension."""
    compact = text.strip()
    if compact.startswith("["):
        if not compact.endswith("]"):
            raise ElementParseError(f"unterminated bracket list {text!r}")
        values = np.array([parse_number(p) for p in compact[1:-1].split(",") if p.strip()])
        if n is not None and values.size != n:
            raise ElementParseError(f"expected a {n}-vector, got {values.size} components")
        return values
    if n is not None and n > 4:
        raise ElementParseError(f"use bracketed components for dimension {n}")
    x = parse_element(text, QUATERNION)
    if n is None:
        if np.abs(x.coeffs[2:]).max() == 0.0:
            n = 2
        elif abs(x.coeffs[0]) == 0.0:
            n = 3
        else:
            n = 4
    return _vector_from_division(x, n)


def _vector_from_division(x, n: int) -> np.ndarray:
    coeffs = x.coeffs  # quaternion coefficients (1, i, j, k)
    if n == 1:
        if np.abs(coeffs[1:]).max() > 0:
            raise ElementParseError("imaginary units do not fit dimension 1")
        return coeffs[:1].copy()
    if n == 2:
        if np.abs(coeffs[2:]).max() > 0:
            raise ElementParseError("units j, k do not fit dimension 2")
        return coeffs[:2].copy()
    if n == 3:
        if abs(coeffs[0]) > 0:
            raise ElementParseError("a real part does not fit dimension 3 (imaginary model)")
        return coeffs[1:].copy()
    return coeffs.copy()


def _check_speed(v: np.ndarray):
    speed = float(np.linalg.norm(v))
    if speed >= 1.0 - 1e-12:
        raise SuperluminalError(f"speed {speed!r} is not strictly below 1")


def _read_catalog(path: str):
    labels, rows = [], []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = [f.strip() for f in line.split(",")]
            label = None
            try:
                float(fields[0])
            except ValueError:
                label = fields[0]
                fields = fields[1:]
            try:
                vec = np.array([float(f) for f in fields])
            except ValueError as exc:
                raise ElementParseError(f"{path}:{line_no}: bad catalog row") from exc
            norm = np.linalg.norm(vec)
            if norm < 1e-12:
                raise ElementParseError(f"{path}:{line_no}: zero direction")
            labels.append(label if label is not None else f"star{len(labels)}")
            rows.append(vec / norm)
    if not rows:
        raise ElementParseError(f"{path}: empty catalog")
    if len({r.size for r in rows}) != 1:
        raise ElementParseError(f"{path}: inconsistent dimensions")
    return labels, np.vstack(rows)


def _csv_row(values) -> str:
    return ",".join(repr(float(v)) for v in values)


@main.command()
@click.option("-v", "--velocity", "v_text", required=True, help="Boost velocity.")
@click.option("--catalog", "catalog_path", required=True, type=click.Path(), help="CSV of stars: [label,]x,y[,z...].")
@click.option("--out", "out_path", required=True, type=click.Path(), help="Output CSV path ('-' for stdout).")
@click.option("--debug", is_flag=True, help="Cross-check the shift three ways and report the spread.")
@_exit_codes
def aberrate(v_text, catalog_path, out_path, debug):
    """Shift a star catalog under a boost.

    CSV schema v1 columns: label, in_1..in_n, out_1..out_n.
    """
    labels, stars = _read_catalog(catalog_path)
    n = stars.shape[1]
    v = _parse_vector_text(v_text, n)
    _check_speed(v)
    shifted = np.vstack([boost_star_shift(a, v) for a in stars])

    if debug:
        algebra = _algebra_for_dimension(n)
        matrix = MoebiusMatrix.boost(menhir_of(vector_embed(v, algebra)))
        L = boost_matrix(v)
        spread = 0.0
        for a, s in zip(stars, shifted):
            by_moebius = vector_part(moebius_apply(matrix, vector_embed(a, algebra)), n, atol=1e-6)
            by_oracle = aberrate_ray(L, a)
            spread = max(
                spread,
                float(np.abs(s - by_moebius).max()),
                float(np.abs(s - by_oracle).max()),
                float(np.abs(by_moebius - by_oracle).max()),
            )
        click.echo(f"max cross-discrepancy (word/moebius/oracle): {spread:.3e}", err=True)

    header = "label," + ",".join(f"in_{k+1}" for k in range(n)) + "," + ",".join(
        f"out_{k+1}" for k in range(n)
    )
    lines = [header]
    for label, a, s in zip(labels, stars, shifted):
        lines.append(f"{label},{_csv_row(a)},{_csv_row(s)}")
    text = "\n".join(lines) + "\n"
    if out_path == "-":
        click.echo(text, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _starfield_points(n: int, count: int) -> np.ndarray:
    if n == 2:
        angles = np.linspace(0.0, 2.0 * math.pi, count, endpoint=False)
        return np.column_stack([np.cos(angles), np.sin(angles)])
    rng = np.random.default_rng(0)
    pts = rng.standard_normal((count, n))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


@main.command()
@click.option("-v", "--velocity", "v_text", required=True, help="First boost velocity.")
@click.option("--w", "w_text", default=None, help="Optional second boost velocity (two-boost mode).")
@click.option("--count", default=12, show_default=True, help="Number of star stones (>= 2).")
@click.option("--format", "fmt", type=click.Choice(["svg", "csv"]), default="svg", show_default=True)
@click.option("--out", "out_path", default="-", show_default=True, type=click.Path())
@_exit_codes
def starfield(v_text, w_text, count, fmt, out_path):
    """Render the star shift on the cromlech (SVG for the planar case).

    CSV schema v1 columns: label, in_1..in_n, out_1..out_n.
    """
    if count < 2:
        raise click.UsageError("--count must be at least 2")
    v = _parse_vector_text(v_text, None)
    n = v.size
    _check_speed(v)
    w = None
    if w_text is not None:
        w = _parse_vector_text(w_text, n)
        _check_speed(w)

    stars = _starfield_points(n, count)
    ev = menhir_of(v)
    menhirs = [ev]
    if w is None:
        shifted = np.vstack([boost_star_shift(a, v) for a in stars])
        fixed = ()
        trace = None
    else:
        ew = menhir_of(w)
        menhirs.append(ew)
        word = [np.zeros(n), ev, np.zeros(n), ew]
        shifted = np.vstack([apply_word(a, word) for a in stars])
        fixed, trace = (), None
        if n == 2:
            try:
                fixed = two_boost_fixed_points(ev, ew)
            except Exception:
                fixed = ()
            trace = ConstructionTrace()
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DegenerateConstructionWarning)
                try:
                    construct_composite_menhir(ev, ew, trace)
                except Exception:
                    trace = None

    if fmt == "svg":
        if n != 2:
            click.echo(f"error: SVG rendering supports only the planar case, got dimension {n}", err=True)
            sys.exit(5)
        text = render_starfield(stars, shifted, menhirs, fixed, trace)
    else:
        header = "label," + ",".join(f"in_{k+1}" for k in range(n)) + "," + ",".join(
            f"out_{k+1}" for k in range(n)
        )
        lines = [header]
        for idx, (a, s) in enumerate(zip(stars, shifted)):
            lines.append(f"star{idx},{_csv_row(a)},{_csv_row(s)}")
        text = "\n".join(lines) + "\n"

    if out_path == "-":
        click.echo(text, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


@main.command()
@click.option("--trials", default=1000, show_default=True, help="Trials per configuration (>= 1).")
@click.option("--seed", default=42, show_default=True, help="Master seed; trial i uses seed XOR i.")
@click.option("-a", "--algebra", "key", default="all", show_default=True,
              type=click.Choice(["all", *CONFIGS]), help="Verification lane.")
@click.option("--tier", type=click.Choice(["normal", "stress"]), default="normal", show_default=True)
@_exit_codes
def verify(trials, seed, key, tier):
    """Check the menhir calculus against the Lorentz-matrix oracle.

    Tolerance: 1e-9 (normal), 1e-6 (stress); the MENHIR_TOLERANCE environment
    variable overrides it.  Exit code 1 when any trial fails.
    """
    if trials < 1:
        raise click.UsageError("--trials must be at least 1")
    tolerance = None
    env = os.environ.get("MENHIR_TOLERANCE")
    if env:
        try:
            tolerance = float(env)
        except ValueError:
            raise click.UsageError(f"MENHIR_TOLERANCE={env!r} is not a number")

    keys = list(CONFIGS) if key == "all" else [key]
    any_failures = False
    for k in keys:
        report = run_equivalence(k, trials, seed, tier, tolerance)
        status = "ok" if report.ok else "FAIL"
        click.echo(
            f"{k:<13} trials={report.trials} tier={tier} "
            f"max_velocity_error={report.max_velocity_error:.3e} "
            f"max_rotation_error={report.max_rotation_error:.3e} "
            f"failures={len(report.failures)} {status}"
        )
        for trial_seed, inputs, errors in report.failures[:10]:
            click.echo(f"  failing seed {trial_seed}: {inputs} -> {errors}", err=True)
        any_failures = any_failures or not report.ok
    if any_failures:
        sys.exit(1)


@main.command()
@click.option("--steps", default=1000, show_default=True, help="Grid steps over [0, 1] (>= 100).")
@click.option("--out", "out_path", default="-", show_default=True, type=click.Path())
@_exit_codes
def goldenscan(steps, out_path):
    """Scan the discrepancy between a speed and its menhir.

    Emits CSV (v, menhir, gap) and reports the refined argmax and the v:menhir
    ratio there (the golden section of the segment, fittingly).
    """
    if steps < 100:
        raise click.UsageError("--steps must be at least 100")
    grid = np.linspace(0.0, 1.0, steps + 1)
    gaps = menhir_gap(grid)
    lines = ["v,menhir,gap"]
    for v, gap in zip(grid, gaps):
        lines.append(f"{float(v)!r},{float(v - gap)!r},{float(gap)!r}")
    text = "\n".join(lines) + "\n"
    if out_path == "-":
        click.echo(text, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)

    v_star = refine_gap_argmax()
    e_star = v_star - float(menhir_gap(v_star))
    click.echo(f"argmax v = {v_star!r}", err=True)
    click.echo(f"menhir e = {e_star!r}", err=True)
    click.echo(f"gap v-e  = {float(menhir_gap(v_star))!r}", err=True)
    click.echo(f"ratio v:e = {v_star / e_star!r}", err=True)


if __name__ == "__main__":
    main()
