"""Context files, twist strings and report schemas.

A context file is YAML::

    n: 2
    d: 3                     # optional; defaults to the lcm of the denominators of C
    C: [["0", "1/3"], ["-1/3", "0"]]
    s: 1                     # optional; must equal len(M)
    M:
      - [[0, 1], [-1, 0]]
    tau_hat: [0.6180339887]  # numeric stand-ins, seminorm layer only
    radial: [[1, 1], [1, 1]] # optional |q_ij|; anything but 1 is rejected

Every validation error carries the line and column of the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path

import yaml

from .laurent import ScalingAutomorphism
from .phase import Angle, ThetaMatrix

SCHEMA_VERSION = "qtorus-report/1"
INPUT_VERSION = "qtorus-context/1"

KNOWN_KEYS = ("n", "d", "C", "s", "M", "tau_hat", "radial")


class ContextError(ValueError):
    """Invalid context file; the message starts with source:line:column."""


@dataclass
class ContextFile:
    n: int
    d: int
    C: list
    M: list
    tau_hat: tuple | None = None
    radial: list | None = None
    source: str = "<input>"
    lines: dict = field(default_factory=dict, repr=False)

    @property
    def s(self) -> int:
        return len(self.M)

    def theta(self) -> ThetaMatrix:
        return ThetaMatrix(self.n, self.C, self.M, d=self.d)


def _where(source, node):
    mark = node.start_mark
    return f"{source}:{mark.line + 1}:{mark.column + 1}"


def _fail(source, node, msg):
    raise ContextError(f"{_where(source, node)}: {msg}")


def _scalar_text(source, node, what):
    if not isinstance(node, yaml.ScalarNode):
        _fail(source, node, f"{what} must be a scalar")
    return node.value


def _as_int(source, node, what):
    text = _scalar_text(source, node, what)
    try:
        return int(text)
    except ValueError:
        _fail(source, node, f"{what} must be an integer, got {text!r}")


def _as_fraction(source, node, what):
    text = _scalar_text(source, node, what).strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        _fail(source, node, f"{what} must be an integer or a fraction p/q, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        _fail(source, node, f"{what} has zero denominator")


def _as_float(source, node, what):
    text = _scalar_text(source, node, what)
    try:
        return float(text)
    except ValueError:
        _fail(source, node, f"{what} must be a real number, got {text!r}")


def _matrix(source, node, n, what, conv):
    if not isinstance(node, yaml.SequenceNode) or len(node.value) != n:
        _fail(source, node, f"{what} must be a list of {n} rows")
    rows, nodes = [], []
    for i, row in enumerate(node.value):
        if not isinstance(row, yaml.SequenceNode) or len(row.value) != n:
            _fail(source, row, f"row {i + 1} of {what} must have {n} entries")
        rows.append([conv(source, x, f"{what}[{i + 1}][{j + 1}]") for j, x in enumerate(row.value)])
        nodes.append(row.value)
    return rows, nodes


def _check_skew(source, mat, nodes, what):
    n = len(mat)
    for i in range(n):
        if mat[i][i] != 0:
            _fail(source, nodes[i][i], f"{what}[{i + 1}][{i + 1}] must be 0 (skew-symmetric)")
        for j in range(i + 1, n):
            if mat[i][j] != -mat[j][i]:
                _fail(source, nodes[j][i],
                      f"{what}[{j + 1}][{i + 1}] = {mat[j][i]} must equal -{what}[{i + 1}][{j + 1}]"
                      f" = {-mat[i][j]} (skew-symmetric)")


def parse_context(text: str, source: str = "<input>") -> ContextFile:
    try:
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        loc = f"{source}:{mark.line + 1}:{mark.column + 1}" if mark else source
        raise ContextError(f"{loc}: not valid YAML ({getattr(exc, 'problem', exc)})") from None
    if root is None:
        raise ContextError(f"{source}:1:1: empty context file")
    if not isinstance(root, yaml.MappingNode):
        _fail(source, root, "context must be a mapping of keys to values")
    entries = {}
    for knode, vnode in root.value:
        key = _scalar_text(source, knode, "key")
        if key not in KNOWN_KEYS:
            _fail(source, knode, f"unknown key {key!r} (expected one of {', '.join(KNOWN_KEYS)})")
        if key in entries:
            _fail(source, knode, f"duplicate key {key!r}")
        entries[key] = vnode
    if "n" not in entries:
        _fail(source, root, "missing required key 'n'")
    n = _as_int(source, entries["n"], "n")
    if n < 1:
        _fail(source, entries["n"], "n must be positive")

    if "C" in entries:
        C, cnodes = _matrix(source, entries["C"], n, "C", _as_fraction)
        _check_skew(source, C, cnodes, "C")
    else:
        C = [[Fraction(0)] * n for _ in range(n)]
    need = lcm(1, *(x.denominator for row in C for x in row))
    if "d" in entries:
        d = _as_int(source, entries["d"], "d")
        if d < 1:
            _fail(source, entries["d"], "d must be positive")
        if d % need:
            _fail(source, entries["d"], f"d = {d} is not divisible by the denominators of C "
                                        f"(need a multiple of {need})")
    else:
        d = need

    M = []
    if "M" in entries:
        mnode = entries["M"]
        if not isinstance(mnode, yaml.SequenceNode):
            _fail(source, mnode, "M must be a list of n x n integer matrices")
        for t, sub in enumerate(mnode.value):
            mat, nodes = _matrix(source, sub, n, f"M[{t + 1}]", _as_int)
            _check_skew(source, mat, nodes, f"M[{t + 1}]")
            M.append(mat)
    if "s" in entries:
        s = _as_int(source, entries["s"], "s")
        if s != len(M):
            _fail(source, entries["s"], f"s = {s} but {len(M)} matrices are given under M")

    tau_hat = None
    if "tau_hat" in entries:
        node = entries["tau_hat"]
        if not isinstance(node, yaml.SequenceNode) or len(node.value) != len(M):
            _fail(source, node, f"tau_hat must list {len(M)} real numbers (one per M matrix)")
        tau_hat = tuple(_as_float(source, x, f"tau_hat[{t + 1}]") for t, x in enumerate(node.value))

    radial = None
    if "radial" in entries:
        radial, nodes = _matrix(source, entries["radial"], n, "radial", _as_float)
        for i in range(n):
            for j in range(n):
                if not radial[i][j] > 0:
                    _fail(source, nodes[i][j], f"radial[{i + 1}][{j + 1}] must be positive")

    lines = {k: v.start_mark.line + 1 for k, v in entries.items()}
    return ContextFile(n, d, C, M, tau_hat, radial, source, lines)


def load_context(path) -> ContextFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ContextError(f"{path}: cannot read ({exc.strerror})") from None
    return parse_context(text, str(path))


def context_to_yaml(ctx: ThetaMatrix, tau_hat=None) -> str:
    """Serialize a deformation matrix as a context file."""
    lines = [f"n: {ctx.n}", f"d: {ctx.d}", "C:"]
    for row in ctx.C:
        lines.append("  - [" + ", ".join(f'"{x}"' for x in row) + "]")
    lines.append(f"s: {ctx.s}")
    if ctx.s:
        lines.append("M:")
        for M in ctx.M:
            lines.append("  - [" + ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                                               for row in M) + "]")
    if tau_hat is not None:
        lines.append("tau_hat: [" + ", ".join(repr(float(t)) for t in tau_hat) + "]")
    return "\n".join(lines) + "\n"


# -- twists ---------------------------------------------------------------------

_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*tau(\d+))?\s*")


def parse_angle(text: str, s: int) -> Angle:
    """Parse '1/3', 'tau1', '-2*tau2 + 1/4' into an Angle."""
    src = text.strip()
    if not src:
        raise ValueError("empty angle")
    c = Fraction(0)
    m = [0] * s
    pos = 0
    while pos < len(src):
        mt = _TERM.match(src, pos)
        if not mt or mt.end() == pos or (mt.group(2) is None and mt.group(3) is None):
            raise ValueError(f"cannot parse angle {text!r} near {src[pos:]!r}")
        if pos and not mt.group(1):
            raise ValueError(f"missing '+' or '-' in angle {text!r}")
        sign = -1 if mt.group(1) == "-" else 1
        coef = Fraction(mt.group(2)) if mt.group(2) is not None else Fraction(1)
        if mt.group(3):
            t = int(mt.group(4))
            if not 1 <= t <= s:
                raise ValueError(f"tau{t} does not exist (context has s={s})")
            if coef.denominator != 1:
                raise ValueError("coefficients of formal irrationals must be integers")
            m[t - 1] += sign * int(coef)
        else:
            c += sign * coef
        pos = mt.end()
    return Angle(c, m)


def parse_twist(spec: str, ctx: ThetaMatrix) -> ScalingAutomorphism:
    """'id', 'alpha', 'modular', or 'custom:a1,a2,...,an' with angle expressions."""
    spec = spec.strip()
    if spec == "id":
        return ScalingAutomorphism.identity(ctx)
    if spec == "alpha":
        return ScalingAutomorphism.alpha(ctx)
    if spec == "modular":
        return ScalingAutomorphism.modular(ctx)
    if spec.startswith("custom:"):
        parts = spec[len("custom:"):].split(",")
        if len(parts) != ctx.n:
            raise ValueError(f"custom twist needs {ctx.n} comma-separated angles, got {len(parts)}")
        return ScalingAutomorphism(ctx, [parse_angle(p, ctx.s) for p in parts])
    raise ValueError(f"unknown twist {spec!r} (use id, alpha, modular or custom:...)")


# -- report schemas ----------------------------------------------------------------

_int_or_bound = {"oneOf": [{"type": "integer", "minimum": 0},
                           {"type": "string", "pattern": "^lower-bound [0-9]+$"}]}

_modeset = {
    "type": "object",
    "required": ["description", "modulus", "equations", "congruences"],
    "properties": {
        "description": {"type": "string"},
        "modulus": {"type": "integer", "minimum": 1},
        "equations": {"type": "array", "items": {
            "type": "object", "required": ["form", "value"],
            "properties": {"form": {"type": "array", "items": {"type": "integer"}},
                           "value": {"type": "integer"}}}},
        "congruences": {"type": "array", "items": {
            "type": "object", "required": ["form", "residue"],
            "properties": {"form": {"type": "array", "items": {"type": "integer"}},
                           "residue": {"type": "integer"}}}},
    },
}

_context = {
    "type": "object",
    "required": ["n", "d", "s", "C", "M"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 1},
        "s": {"type": "integer", "minimum": 0},
        "C": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "M": {"type": "array"},
    },
}


def _envelope(kind, body_required, body_props):
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["schema", "kind", "context"] + body_required,
        "properties": {"schema": {"const": SCHEMA_VERSION}, "kind": {"const": kind},
                       "context": _context, **body_props},
    }


SCHEMAS = {
    "report": _envelope("report", ["dimensions"], {"dimensions": {
        "type": "object",
        "required": ["flavor", "n", "dg", "w_dg", "db", "w_db", "generic", "notes"],
        "properties": {
            "flavor": {"enum": ["regular", "holomorphic", "smooth"]},
            "n": {"type": "integer"},
            "dg": _int_or_bound, "w_dg": _int_or_bound,
            "db": {"type": "integer"}, "w_db": {"type": "integer"},
            "generic": {"type": "boolean"},
            "notes": {"type": "object", "additionalProperties": {"type": "string"}},
            "isotropic": {"type": "object", "required": ["rank", "basis", "complete"],
                          "properties": {"complete": {"type": "boolean"}}},
        }}}),
    "hh": _envelope("hh", ["table"], {"table": {
        "type": "object",
        "required": ["flavor", "n", "twist", "degrees", "box"],
        "properties": {
            "flavor": {"enum": ["homology", "cohomology"]},
            "twist": {"type": "array", "items": {"type": "string"}},
            "box": {"type": "integer", "minimum": 0},
            "degrees": {"type": "array", "items": {
                "type": "object",
                "required": ["degree", "multiplicity", "modes", "box_modes", "box_dimension"],
                "properties": {"degree": {"type": "integer"},
                               "multiplicity": {"type": "integer"},
                               "modes": _modeset,
                               "box_modes": {"type": "integer"},
                               "box_dimension": {"type": "integer"}}}},
        }}}),
    "verify": _envelope("verify", ["check", "passed", "details"], {
        "check": {"enum": ["koszul-d2", "duality", "oracle", "continuity"]},
        "passed": {"type": "boolean"},
        "counterexample": {},
        "details": {"type": "object"},
    }),
    "seminorm": _envelope("seminorm", ["element", "values"], {
        "element": {"type": "array"},
        "values": {"type": "object"},
        "guard": {"type": "object"},
    }),
}


def context_dict(ctx: ThetaMatrix) -> dict:
    return {"n": ctx.n, "d": ctx.d, "s": ctx.s,
            "C": [[str(x) for x in row] for row in ctx.C],
            "M": [[list(row) for row in M] for M in ctx.M]}
