"""
Flat ``key = value`` run configuration.

Every coin entry and initial amplitude is spelled out by real and imaginary
part, for example::

    label = phased
    boundary_coin.a.re = 0.7071067811865476
    boundary_coin.a.im = 0.0
    ...
    initial.beta.im = 0.7071067811865476

Lines starting with ``#`` and blank lines are ignored. Keys other than the
twenty numeric ones and ``label`` are kept as free-form metadata only if they
start with ``meta.``; anything else is an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .coins import Coin, WalkSpec, phased_spec, mixed_spec, hadamard_spec
from .errors import ConfigError, NotUnitary

__all__ = [
    "COIN_KEYS",
    "STATE_KEYS",
    "NUMERIC_KEYS",
    "RunConfig",
    "parse_config",
    "read_config",
    "format_config",
    "write_config",
    "EXAMPLES",
]

COIN_KEYS = [
    f"{coin}.{entry}.{part}"
    for coin in ("boundary_coin", "bulk_coin")
    for entry in "abcd"
    for part in ("re", "im")
]
STATE_KEYS = [f"initial.{amp}.{part}" for amp in ("alpha", "beta") for part in ("re", "im")]
NUMERIC_KEYS = COIN_KEYS + STATE_KEYS

EXAMPLES = {
    "phased": phased_spec,
    "mixed": mixed_spec,
    "hadamard": hadamard_spec,
}


@dataclass
class RunConfig:
    boundary_coin: tuple[complex, complex, complex, complex]
    bulk_coin: tuple[complex, complex, complex, complex]
    alpha: complex
    beta: complex
    label: str = ""
    metadata: dict[str, str] = field(default_factory=dict)

    def to_spec(self) -> WalkSpec:
        try:
            boundary = Coin(*self.boundary_coin)
        except NotUnitary as exc:
            raise ConfigError(f"boundary_coin: {exc}") from None
        try:
            bulk = Coin(*self.bulk_coin)
        except NotUnitary as exc:
            raise ConfigError(f"bulk_coin: {exc}") from None
        try:
            return WalkSpec(boundary, bulk, self.alpha, self.beta)
        except ValueError as exc:
            raise ConfigError(f"initial: {exc}") from None

    @classmethod
    def from_spec(cls, spec: WalkSpec, label: str = "") -> RunConfig:
        return cls(
            boundary_coin=spec.boundary_coin.entries,
            bulk_coin=spec.bulk_coin.entries,
            alpha=spec.alpha,
            beta=spec.beta,
            label=label,
        )


def parse_config(text: str, source: str = "<config>") -> RunConfig:
    values: dict[str, float] = {}
    label = ""
    metadata: dict[str, str] = {}
    seen: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        where = f"{source}:{lineno}"
        if not sep or not key:
            raise ConfigError(f"{where}: expected 'key = value', got {raw!r}")
        if key in seen:
            raise ConfigError(f"{where}: duplicate key {key!r} (first on line {seen[key]})")
        seen[key] = lineno

        if key == "label":
            label = value
        elif key.startswith("meta."):
            metadata[key[5:]] = value
        elif key in NUMERIC_KEYS:
            try:
                values[key] = float(value)
            except ValueError:
                raise ConfigError(f"{where}: {key}: not a number: {value!r}") from None
        else:
            raise ConfigError(f"{where}: unknown key {key!r}")

    missing = [k for k in NUMERIC_KEYS if k not in values]
    if missing:
        raise ConfigError(f"{source}: missing key {missing[0]!r}" + (
            f" (and {len(missing) - 1} more)" if len(missing) > 1 else ""
        ))

    def cplx(prefix: str) -> complex:
        return complex(values[f"{prefix}.re"], values[f"{prefix}.im"])

    cfg = RunConfig(
        boundary_coin=tuple(cplx(f"boundary_coin.{e}") for e in "abcd"),
        bulk_coin=tuple(cplx(f"bulk_coin.{e}") for e in "abcd"),
        alpha=cplx("initial.alpha"),
        beta=cplx("initial.beta"),
        label=label,
        metadata=metadata,
    )
    try:
        cfg.to_spec()
    except ConfigError as exc:
        raise ConfigError(f"{source}: {exc}") from None
    return cfg


def read_config(path) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror or exc}") from None
    return parse_config(text, str(path))


def format_config(cfg: RunConfig) -> str:
    lines = []
    if cfg.label:
        lines.append(f"label = {cfg.label}")
    for key, value in cfg.metadata.items():
        lines.append(f"meta.{key} = {value}")

    def put(prefix: str, z: complex) -> None:
        # repr round-trips a float exactly
        lines.append(f"{prefix}.re = {z.real!r}")
        lines.append(f"{prefix}.im = {z.imag!r}")

    for name, coin in (("boundary_coin", cfg.boundary_coin), ("bulk_coin", cfg.bulk_coin)):
        for entry, z in zip("abcd", coin):
            put(f"{name}.{entry}", z)
    put("initial.alpha", cfg.alpha)
    put("initial.beta", cfg.beta)
    return "\n".join(lines) + "\n"


def write_config(path, cfg: RunConfig) -> None:
    Path(path).write_text(format_config(cfg))
