"""Command-line front end.

Exit status: 0 success, 1 validation error, 2 numerical failure,
3 failed verification suite.
"""

from __future__ import annotations

import sys
from typing import Sequence

import numpy as np

from .config import RunConfig, dump_config, parse_config
from .curves import CurveSamples
from .errors import ConfigurationError, DomainError, NumericalFailure, ValidationError
from .kernels import build_kernels, kernel_time_values
from .transition import require_valid
from .verify import Check, run_suite
from .viscoelastic import (
    MaxwellParams,
    StepExperiment,
    constant_order_reference,
    creep_compliance,
    reference_model,
    relaxation_modulus,
    run_step_experiment,
)

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL, EXIT_VERIFY_FAILED = 0, 1, 2, 3


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def emit_csv(samples: Sequence[CurveSamples], path, params_echo: str | None = None, time_scale: float = 1.0):
    """Write aligned curves as CSV (``path`` of ``-`` or ``None`` means stdout).

    Layout: ``# params: ...`` line, ``t,<label>...`` header, then one row per
    time with 12 significant digits. The time column is multiplied by
    ``time_scale``.
    """
    samples = list(samples)
    if not samples:
        raise ValidationError("emit_csv needs at least one curve")
    t = samples[0].t_grid
    for c in samples[1:]:
        if c.t_grid.shape != t.shape or np.any(c.t_grid != t):
            raise ValidationError(f"curve {c.quantity_label} is on a different time grid")
    if params_echo is None:
        params_echo = " | ".join(dict.fromkeys(c.params_echo for c in samples))
    lines = [f"# params: {params_echo}", ",".join(["t"] + [c.quantity_label for c in samples])]
    columns = [t * time_scale] + [c.values for c in samples]
    for row in zip(*columns):
        lines.append(",".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValidationError(f"cannot write {path}: {exc.strerror}") from exc


def _with_t0(curve: CurveSamples, value: float) -> CurveSamples:
    return CurveSamples(
        np.concatenate([[0.0], curve.t_grid]),
        np.concatenate([[value], curve.values]),
        curve.quantity_label,
        curve.params_echo,
    )


def _material(cfg: RunConfig) -> list[CurveSamples]:
    f = require_valid(cfg.transition_function())
    t = cfg.grid()
    inv = cfg.inversion()
    a1 = cfg.a1
    model = reference_model(a1)
    if cfg.quantity == "Gd":
        curves = [relaxation_modulus(f, a1, t, inv)]
        which, t0_main = "G", (1.0 / a1 if a1 > 0 else None)
    else:
        curves = [creep_compliance(f, a1, t, inv)]
        which, t0_main = "J", a1
    if cfg.include_reference:
        for tag, alpha in (("alpha1", f.initial), ("alpha2", f.limit)):
            ref = constant_order_reference(model, which, alpha, a1, t)
            curves.append(CurveSamples(t, ref, f"{which}ref_{tag}"))
    if cfg.include_t0:
        if t0_main is None:
            raise ValidationError("G_d diverges at t = 0 for a1 = 0 (Scott Blair); drop --include-t0")
        starts = [t0_main] + [t0_main] * (len(curves) - 1)
        curves = [_with_t0(c, v) for c, v in zip(curves, starts)]
    return curves


def _experiment(cfg: RunConfig) -> list[CurveSamples]:
    f = require_valid(cfg.transition_function())
    params = MaxwellParams(cfg.a1, cfg.b1, cfg.T)
    exp = StepExperiment(cfg.kind, cfg.amplitude, cfg.initial_stress, cfg.initial_strain)
    curve = run_step_experiment(f, params, exp, cfg.grid(), cfg.inversion())
    if cfg.include_t0:
        sigma0, eps0 = exp.initial_conditions(params)
        start = sigma0 if exp.kind == "relaxation" else eps0
        if not np.isfinite(start):
            raise ValidationError("initial stress is unbounded for a1 = 0 under the constraint")
        curve = _with_t0(curve, start)
    return [curve]


def _transition(cfg: RunConfig) -> list[CurveSamples]:
    f = require_valid(cfg.transition_function())
    t = cfg.grid()
    if cfg.include_t0:
        t = np.concatenate([[0.0], t])
    return [CurveSamples(t, np.asarray(f(t), dtype=float), "alpha")]


def _kernel(cfg: RunConfig) -> list[CurveSamples]:
    if cfg.include_t0:
        raise ValidationError("kernels are weakly singular at t = 0; drop --include-t0")
    k = build_kernels(cfg.transition_function())
    return [kernel_time_values(k, cfg.kernel, cfg.grid(), cfg.inversion())]


def run_verify(cfg: RunConfig, out=None) -> list[Check]:
    """Run the selected suite and print one PASS/FAIL line per check."""
    out = out or sys.stdout
    f = cfg.transition_function()
    if f is not None:
        require_valid(f)
    checks = run_suite(cfg.suite, f, cfg.a1, cfg.inversion())
    for c in checks:
        print(c.line(), file=out)
    n_fail = sum(not c.passed for c in checks)
    print(f"suite {cfg.suite}: {len(checks) - n_fail}/{len(checks)} passed", file=out)
    return checks


_PRODUCERS = {"material": _material, "experiment": _experiment, "transition": _transition, "kernel": _kernel}


def run(cfg: RunConfig) -> int:
    if cfg.command == "verify":
        checks = run_verify(cfg)
        return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY_FAILED
    curves = _PRODUCERS[cfg.command](cfg)
    emit_csv(curves, cfg.output, params_echo=cfg.echo(), time_scale=cfg.T)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        cfg, dump = parse_config(sys.argv[1:] if argv is None else argv)
        if dump:
            sys.stdout.write(dump_config(cfg))
            return EXIT_OK
        return run(cfg)
    except (ValidationError, ConfigurationError, DomainError) as exc:
        for msg in getattr(exc, "violations", None) or [str(exc)]:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
