"""Run configuration: flags, ``key = value`` config files and validation."""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import ValidationError
from .inversion import InversionConfig
from .transition import VARIANTS, TransitionFunction, from_params, validate

COMMANDS = ("transition", "kernel", "material", "experiment", "verify")
SUITES = ("reduction", "sonine", "reciprocity", "inverters", "transition-transform")
TRANSITION_KEYS = ("alpha", "alpha1", "alpha2", "c", "beta", "a", "b", "delta")


@dataclass
class RunConfig:
    command: str
    transition: str | None = None
    alpha: float | None = None
    alpha1: float | None = None
    alpha2: float | None = None
    c: float | None = None
    beta: float | None = None
    a: float | None = None
    b: float | None = None
    delta: float | None = None
    a1: float = 1.0
    b1: float = 1.0
    T: float = 1.0
    tmin: float = 1e-3
    tmax: float = 1e3
    points: int = 200
    spacing: str = "log"
    nodes: int = 32
    contour_scale: float = 1.0
    oracle_terms: int = 16
    output: str = "-"
    include_reference: bool = False
    include_t0: bool = False
    quantity: str = "Gd"
    kernel: str = "psi"
    suite: str | None = None
    kind: str = "relaxation"
    amplitude: float = 1.0
    initial_stress: float | None = None
    initial_strain: float | None = None

    def transition_function(self) -> TransitionFunction | None:
        if self.transition is None:
            return None
        params = {k: getattr(self, k) for k in TRANSITION_KEYS if getattr(self, k) is not None}
        return from_params(self.transition, params)

    def inversion(self) -> InversionConfig:
        return InversionConfig(self.nodes, self.contour_scale, self.oracle_terms)

    def grid(self) -> np.ndarray:
        if self.spacing == "log":
            return np.logspace(math.log10(self.tmin), math.log10(self.tmax), self.points)
        return np.linspace(self.tmin, self.tmax, self.points)

    def echo(self) -> str:
        """One-line ``key=value`` record of every set field except the output path."""
        return " ".join(f"{k}={v}" for k, v in _items(self) if k != "output")


FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}
_BOOL_FIELDS = {"include_reference", "include_t0"}
_INT_FIELDS = {"points", "nodes", "oracle_terms"}
_STR_FIELDS = {"command", "transition", "spacing", "output", "quantity", "kernel", "suite", "kind"}


def _items(cfg):
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        if value is not None:
            yield f.name, value


def _coerce(key, text, errors):
    if key in _BOOL_FIELDS:
        low = str(text).strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        errors.append(f"{key}: expected a boolean, got {text!r}")
        return None
    if key in _STR_FIELDS:
        return str(text).strip()
    try:
        if key in _INT_FIELDS:
            value = float(text)
            if value != int(value):
                raise ValueError
            return int(value)
        return float(text)
    except (TypeError, ValueError):
        kind = "an integer" if key in _INT_FIELDS else "a number"
        errors.append(f"{key}: expected {kind}, got {text!r}")
        return None


def parse_config_text(text: str, errors: list[str]) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            errors.append(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
            continue
        key, _, val = (part.strip() for part in line.partition("="))
        key = key.replace("-", "_")
        if key not in FIELD_TYPES:
            errors.append(f"line {lineno}: unknown key {key!r}")
            continue
        coerced = _coerce(key, val, errors)
        if coerced is not None:
            values[key] = coerced
    return values


def dump_config(cfg: RunConfig) -> str:
    lines = ["# scarpi-visco run configuration"]
    lines += [f"{k} = {str(v).lower() if isinstance(v, bool) else v}" for k, v in _items(cfg)]
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message, [message])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="scarpi-visco",
        description="Variable-order (Scarpi) fractional Maxwell model: kernels, material functions, checks.",
        argument_default=argparse.SUPPRESS,
    )
    # explicit None: argparse would otherwise check the SUPPRESS sentinel against choices
    p.add_argument("command", nargs="?", choices=COMMANDS, default=None)
    p.add_argument("--config", dest="config_file", help="key = value file; flags override it")
    p.add_argument("--dump-config", action="store_true", help="print the resolved config and exit")
    g = p.add_argument_group("transition")
    g.add_argument("--transition", choices=sorted(VARIANTS))
    for key in TRANSITION_KEYS:
        g.add_argument(f"--{key}", type=float)
    m = p.add_argument_group("model")
    m.add_argument("--a1", type=float)
    m.add_argument("--b1", type=float)
    m.add_argument("--T", type=float, help="time scale; rescales the output time column")
    t = p.add_argument_group("grid")
    t.add_argument("--tmin", type=float)
    t.add_argument("--tmax", type=float)
    t.add_argument("--points", type=int)
    t.add_argument("--spacing", choices=("log", "linear"))
    t.add_argument("--include-t0", action="store_true", help="prepend the analytic t = 0 row")
    i = p.add_argument_group("inversion")
    i.add_argument("--nodes", type=int)
    i.add_argument("--contour-scale", type=float)
    i.add_argument("--oracle-terms", type=int)
    o = p.add_argument_group("output")
    o.add_argument("-o", "--output")
    o.add_argument("--include-reference", action="store_true")
    o.add_argument("--quantity", choices=("Gd", "Jd"))
    o.add_argument("--kernel", choices=("psi", "phi"))
    o.add_argument("--suite", choices=SUITES)
    e = p.add_argument_group("experiment")
    e.add_argument("--kind", choices=("relaxation", "creep"))
    e.add_argument("--amplitude", type=float)
    e.add_argument("--initial-stress", type=float)
    e.add_argument("--initial-strain", type=float)
    return p


def _check(cfg: RunConfig) -> list[str]:
    errors = []
    if cfg.command not in COMMANDS:
        errors.append(f"command must be one of {', '.join(COMMANDS)}; got {cfg.command!r}")
    if cfg.transition is None:
        if cfg.command not in ("verify",):
            errors.append("missing required field transition")
    elif cfg.transition not in VARIANTS:
        errors.append(f"transition must be one of {sorted(VARIANTS)}, got {cfg.transition!r}")
    else:
        try:
            f = cfg.transition_function()
        except ValidationError as exc:
            errors.append(str(exc))
        else:
            # one bad field can break several conditions; report it once
            errors.extend(dict.fromkeys(v.message for v in validate(f)))
    if not cfg.a1 >= 0:
        errors.append(f"a1 must be >= 0, got {cfg.a1:g}")
    if not cfg.b1 > 0:
        errors.append(f"b1 must be > 0, got {cfg.b1:g}")
    if not cfg.T > 0:
        errors.append(f"T must be > 0, got {cfg.T:g}")
    if not cfg.tmin > 0:
        errors.append(f"tmin must be > 0, got {cfg.tmin:g}")
    if not cfg.tmin < cfg.tmax:
        errors.append(f"tmin must be < tmax, got {cfg.tmin:g} >= {cfg.tmax:g}")
    if cfg.points < 2:
        errors.append(f"points must be >= 2, got {cfg.points}")
    if cfg.spacing not in ("log", "linear"):
        errors.append(f"spacing must be log or linear, got {cfg.spacing!r}")
    if cfg.nodes < 8:
        errors.append(f"nodes must be >= 8, got {cfg.nodes}")
    if not cfg.contour_scale > 0:
        errors.append(f"contour_scale must be > 0, got {cfg.contour_scale:g}")
    if cfg.oracle_terms not in range(8, 19, 2):
        errors.append(f"oracle_terms must be even and in [8, 18], got {cfg.oracle_terms}")
    if cfg.quantity not in ("Gd", "Jd"):
        errors.append(f"quantity must be Gd or Jd, got {cfg.quantity!r}")
    if cfg.kernel not in ("psi", "phi"):
        errors.append(f"kernel must be psi or phi, got {cfg.kernel!r}")
    if cfg.kind not in ("relaxation", "creep"):
        errors.append(f"kind must be relaxation or creep, got {cfg.kind!r}")
    if cfg.command == "experiment" and cfg.amplitude == 0:
        errors.append("amplitude must be non-zero")
    if cfg.command == "verify":
        if cfg.suite is None:
            errors.append("missing required field suite")
        elif cfg.suite not in SUITES:
            errors.append(f"unknown suite {cfg.suite!r}; expected one of {', '.join(SUITES)}")
    return errors


def parse_config(argv=None, config_text: str | None = None) -> tuple[RunConfig, bool]:
    """Resolve a :class:`RunConfig` from defaults, a config file and flags.

    Returns ``(config, dump_requested)``. All problems found are reported
    together in one :class:`ValidationError`.
    """
    ns = vars(build_parser().parse_args([] if argv is None else list(argv)))
    errors: list[str] = []
    values: dict = {}
    texts = [config_text] if config_text is not None else []
    if "config_file" in ns:
        path = ns.pop("config_file")
        try:
            with open(path, encoding="utf-8") as fh:
                texts.append(fh.read())
        except OSError as exc:
            errors.append(f"cannot read config file {path}: {exc.strerror}")
    for text in texts:
        values.update(parse_config_text(text, errors))
    if ns.get("command") is None:
        ns.pop("command", None)
    dump = bool(ns.pop("dump_config", False))
    values.update(ns)
    if "command" not in values:
        errors.append("missing required field command")
    if errors:
        raise ValidationError("; ".join(errors), errors)
    cfg = RunConfig(**values)
    errors = _check(cfg)
    if errors:
        raise ValidationError("; ".join(errors), errors)
    return cfg, dump
