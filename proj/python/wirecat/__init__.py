"""Wire-diagram calculus for stringent symmetric monoidal 2-categories."""

from wirecat._core import (
    Model,
    WirecatError,
    apply_script,
    check_axioms,
    check_equal,
    convert_roundtrip,
    deloop_p,
    derive_beta,
    derive_phi,
    eval,
    load_model,
    normalize,
    parse_diagram,
    parse_script,
    render,
    sphere_q,
)

__all__ = [
    "Model",
    "WirecatError",
    "apply_script",
    "check_axioms",
    "check_equal",
    "convert_roundtrip",
    "deloop_p",
    "derive_beta",
    "derive_phi",
    "eval",
    "load_model",
    "normalize",
    "parse_diagram",
    "parse_script",
    "render",
    "sphere_q",
]
