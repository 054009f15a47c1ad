"""Key-value configuration for tolerances, quadrature defaults, and seeds.

File format: one ``key = value`` pair per line, ``#`` comments allowed.
Recognized keys:

    tol_geo          point-classification tolerance (default 1e-9)
    tol_map          map-image assertion tolerance (default 1e-8)
    quad_kind        gauss-jacobi-split | tanh-sinh
    quad_nodes       nodes per panel (default 48)
    quad_target      panel error target (default 1e-12)
    seed             RNG seed for sampled checks (default 0)

Command-line flags override file values.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .quadrature import QuadratureRule


@dataclass(frozen=True)
class Settings:
    tol_geo: float = 1e-9
    tol_map: float = 1e-8
    quad_kind: str = "gauss-jacobi-split"
    quad_nodes: int = 48
    quad_target: float = 1e-12
    seed: int = 0

    @property
    def rule(self) -> QuadratureRule:
        return QuadratureRule(self.quad_kind, self.quad_nodes, self.quad_target)


def load_settings(path: str | None = None, overrides: dict | None = None) -> Settings:
    values: dict = {}
    if path:
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"bad config line: {raw.rstrip()}")
                key, val = (s.strip() for s in line.split("=", 1))
                values[key] = val
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})

    settings = Settings()
    casts = {"tol_geo": float, "tol_map": float, "quad_kind": str,
             "quad_nodes": int, "quad_target": float, "seed": int}
    for key, val in values.items():
        if key not in casts:
            raise ValueError(f"unknown config key {key!r}")
        settings = replace(settings, **{key: casts[key](val)})
    return settings
