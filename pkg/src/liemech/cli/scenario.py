"""Scenario files: a small ``key = value`` format with ``[sections]``.

Grammar, one item per line:

* ``# ...`` starts a comment (to end of line); blank lines are ignored
* ``[name]`` opens a section; keys before the first section are top-level
* ``key = value`` where a value is a word, a number, or a comma list of numbers
* inside ``[controls]`` the key ``knot`` may repeat: ``knot = t, u1, u2, ...``

``serialize(parse(text))`` is the canonical form: fixed key order, defaults
written out, numbers in shortest round-trip form. Its SHA-256 is the digest.
"""

import hashlib
import re
from dataclasses import dataclass, field

import numpy as np

from liemech.dynamics import SYSTEMS, BodyParams, BodyState, ControlTable, fmt
from liemech.errors import InvariantViolation, MissingField, ParseError, ValidationError
from liemech.groups.quaternion import Quaternion
from liemech.groups.se3 import Pose3

HAMILTONIAN_SYSTEM = "hamiltonian_particle"
SYSTEM_NAMES = tuple(SYSTEMS) + (HAMILTONIAN_SYSTEM,)
POTENTIALS = ("free", "harmonic", "kepler")

# section -> key -> kind; "word" values are single tokens, numbers are comma lists
SCHEMA = {
    "": {"system": "word", "dt": "number", "duration": "number", "method": "word"},
    "body": {"mass": "numbers", "inertia": "numbers", "mgl": "number", "chi": "numbers", "h": "number"},
    "initial": {"v": "numbers", "w": "numbers", "gamma": "numbers", "position": "numbers",
                "attitude": "numbers", "q": "numbers", "p": "numbers"},
    "controls": {"knot": "numbers"},
    "hamiltonian": {"mass": "number", "potential": "word", "k": "number"},
    "output": {"trajectory": "word", "jolt": "word", "thresholds": "numbers"},
}

_SECTION = re.compile(r"^\[\s*([A-Za-z_][A-Za-z0-9_]*)\s*\]$")
_KEY = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_WORD = re.compile(r"^[A-Za-z_][A-Za-z0-9_.+-]*$")


def _parse_numbers(value, line, col):
    out = []
    offset = 0
    for part in value.split(","):
        token = part.strip()
        where = col + offset + (len(part) - len(part.lstrip()))
        offset += len(part) + 1
        if not token:
            raise ParseError("empty list element", line, where)
        try:
            x = float(token)
        except ValueError:
            raise ParseError(f"'{token}' is not a number", line, where) from None
        if not np.isfinite(x):
            raise ParseError(f"'{token}' is not a finite number", line, where)
        out.append(x)
    return tuple(out)


def _raw_parse(text):
    """Return ``{section: {key: value}}`` with knots as a list, checking syntax only."""
    data = {name: {} for name in SCHEMA}
    data["controls"]["knot"] = []
    section = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("["):
            m = _SECTION.match(stripped)
            if not m:
                raise ParseError(f"malformed section header '{stripped}'", lineno, indent)
            name = m.group(1).lower()
            if name not in SCHEMA or name == "":
                raise ParseError(f"unknown section '[{name}]'", lineno, indent + 1)
            section = name
            continue
        if "=" not in stripped:
            raise ParseError("expected 'key = value'", lineno, indent)
        key_part, value_part = line.split("=", 1)
        key = key_part.strip().lower()
        if not _KEY.match(key):
            raise ParseError(f"invalid key '{key}'", lineno, indent)
        where = f"[{section}] " if section else ""
        kinds = SCHEMA[section]
        if key not in kinds:
            raise ParseError(f"unknown key '{key}' in {where or 'top level'}".rstrip(), lineno, indent)
        value = value_part.strip()
        vcol = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        if not value:
            raise ParseError(f"key '{key}' has no value", lineno, vcol)
        kind = kinds[key]
        if kind == "word":
            if not _WORD.match(value):
                raise ParseError(f"'{value}' is not a single word", lineno, vcol)
            parsed = value.lower()
        else:
            parsed = _parse_numbers(value, lineno, vcol)
            if kind == "number":
                if len(parsed) != 1:
                    raise ParseError(f"key '{key}' takes one number", lineno, vcol)
                parsed = parsed[0]
        if section == "controls":
            data[section]["knot"].append((parsed, lineno))
            continue
        if key in data[section]:
            raise ParseError(f"duplicate key '{key}'", lineno, indent)
        data[section][key] = parsed
    return data


def _need(data, section, key):
    if key not in data[section]:
        raise MissingField(f"{section}.{key}" if section else key)
    return data[section][key]


def _vector(values, name, size):
    if len(values) != size:
        raise ValidationError(f"{name} needs {size} values, got {len(values)}")
    return tuple(values)


def _flag(data, key, default):
    value = data["output"].get(key, default)
    if value not in ("yes", "no"):
        raise ValidationError(f"output.{key} must be 'yes' or 'no', got '{value}'")
    return value


@dataclass(frozen=True)
class Scenario:
    system: str
    dt: float
    duration: float
    method: str
    body: dict = field(default_factory=dict)
    initial: dict = field(default_factory=dict)
    knots: tuple = ()
    hamiltonian: dict = field(default_factory=dict)
    output: dict = field(default_factory=dict)

    @property
    def steps(self):
        return int(round(self.duration / self.dt))

    def params(self):
        b = self.body
        return BodyParams(m=b.get("mass", (1.0, 1.0, 1.0)), i=b.get("inertia", (1.0, 1.0, 1.0)),
                          mgl=b.get("mgl", 0.0), chi=b.get("chi"), h=b.get("h", 0.0))

    def state0(self):
        ini = self.initial
        pose = Pose3()
        if "position" in ini or "attitude" in ini:
            q = ini.get("attitude", (1.0, 0.0, 0.0, 0.0))
            pose = Pose3(Quaternion(q[0], q[1:]).to_rotation(), ini.get("position", (0.0, 0.0, 0.0)))
        return BodyState(ini.get("v", (0.0, 0.0, 0.0)), ini.get("w", (0.0, 0.0, 0.0)), pose,
                         ini.get("gamma"))

    def controls(self):
        if not self.knots:
            return None
        return ControlTable([k[0] for k in self.knots], [k[1:] for k in self.knots])

    @property
    def wants_jolt(self):
        return self.output.get("jolt") == "yes"


_REQUIRED = {
    "free_euler": [("body", "inertia"), ("initial", "w")],
    "satellite": [("body", "inertia"), ("initial", "w")],
    "heavy_top": [("body", "inertia"), ("body", "mgl"), ("body", "chi"), ("initial", "w"),
                  ("initial", "gamma")],
    "newton_euler": [("body", "mass"), ("body", "inertia"), ("initial", "v"), ("initial", "w")],
    "submarine": [("body", "mass"), ("body", "inertia"), ("initial", "v"), ("initial", "w")],
    "hovercraft": [("body", "mass"), ("body", "inertia"), ("body", "h"), ("initial", "v"),
                   ("initial", "w")],
    HAMILTONIAN_SYSTEM: [("hamiltonian", "mass"), ("hamiltonian", "potential"), ("initial", "q"),
                         ("initial", "p")],
}


def parse_scenario(text):
    data = _raw_parse(text)
    system = _need(data, "", "system")
    if system not in SYSTEM_NAMES:
        raise ValidationError(f"system: unknown system '{system}' (known: {', '.join(SYSTEM_NAMES)})")
    dt = _need(data, "", "dt")
    duration = _need(data, "", "duration")
    if not dt > 0:
        raise ValidationError(f"dt must be positive, got {fmt(dt)}")
    if not duration > 0:
        raise ValidationError(f"duration must be positive, got {fmt(duration)}")
    steps = int(round(duration / dt))
    if steps < 1 or abs(steps * dt - duration) > dt:
        raise ValidationError(f"duration {fmt(duration)} is not a whole number of steps of {fmt(dt)}")
    method = data[""].get("method", "rk4")
    if method not in ("rk4", "euler"):
        raise ValidationError(f"method must be 'rk4' or 'euler', got '{method}'")
    for section, key in _REQUIRED[system]:
        _need(data, section, key)

    body = {}
    for key, value in data["body"].items():
        if key in ("mass", "inertia"):
            if len(value) == 1:
                value = value * 3
            body[key] = _vector(value, f"body.{key}", 3)
        elif key == "chi":
            body[key] = _vector(value, "body.chi", 3)
        else:
            body[key] = value

    initial = {}
    for key, value in data["initial"].items():
        size = {"attitude": 4}.get(key, 3)
        if key in ("q", "p"):
            size = len(value)
        initial[key] = _vector(value, f"initial.{key}", size)

    hamiltonian = dict(data["hamiltonian"])
    if system == HAMILTONIAN_SYSTEM:
        if hamiltonian["potential"] not in POTENTIALS:
            raise ValidationError(f"hamiltonian.potential must be one of {', '.join(POTENTIALS)}, "
                                  f"got '{hamiltonian['potential']}'")
        if hamiltonian["potential"] != "free":
            _need(data, "hamiltonian", "k")
        if len(initial["q"]) != len(initial["p"]):
            raise ValidationError("initial.q and initial.p must have the same length")
        if not hamiltonian["mass"] > 0:
            raise ValidationError(f"hamiltonian.mass must be positive, got {fmt(hamiltonian['mass'])}")

    width = 0 if system == HAMILTONIAN_SYSTEM else SYSTEMS[system].n_controls
    knots = []
    for values, lineno in data["controls"]["knot"]:
        if width == 0:
            raise ValidationError(f"controls.knot (line {lineno}): system {system} takes no controls")
        if len(values) != width + 1:
            raise ValidationError(f"controls.knot (line {lineno}): expected time plus {width} inputs, "
                                  f"got {len(values)} values")
        knots.append(tuple(values))

    output = {"trajectory": _flag(data, "trajectory", "yes"), "jolt": _flag(data, "jolt", "no")}
    if output["jolt"] == "yes":
        if system == HAMILTONIAN_SYSTEM:
            raise ValidationError("output.jolt: jolt reports need a rigid-body system")
        th = _need(data, "output", "thresholds")
        output["thresholds"] = _vector(th, "output.thresholds", 2)

    sc = Scenario(system, dt, duration, method, body, initial, tuple(knots), hamiltonian, output)
    if system != HAMILTONIAN_SYSTEM:
        try:
            sc.params()
        except ValidationError as exc:
            raise ValidationError(f"body: {exc}") from None
        try:
            sc.state0()
        except (InvariantViolation, ValidationError) as exc:
            raise ValidationError(f"initial: {exc}") from None
        try:
            sc.controls()
        except ValidationError as exc:
            raise ValidationError(f"controls: {exc}") from None
    return sc


def _fmt_value(value):
    if isinstance(value, str):
        return value
    if isinstance(value, tuple):
        return ", ".join(fmt(x) for x in value)
    return fmt(value)


def serialize(sc):
    lines = [f"system = {sc.system}", f"dt = {fmt(sc.dt)}", f"duration = {fmt(sc.duration)}",
             f"method = {sc.method}"]
    sections = [("body", sc.body), ("initial", sc.initial), ("hamiltonian", sc.hamiltonian)]
    for name, values in sections:
        if values:
            lines += ["", f"[{name}]"]
            lines += [f"{k} = {_fmt_value(values[k])}" for k in SCHEMA[name] if k in values]
    if sc.knots:
        lines += ["", "[controls]"] + [f"knot = {_fmt_value(k)}" for k in sc.knots]
    lines += ["", "[output]"] + [f"{k} = {_fmt_value(sc.output[k])}" for k in SCHEMA["output"]
                                 if k in sc.output]
    return "\n".join(lines) + "\n"


def scenario_digest(sc):
    return hashlib.sha256(serialize(sc).encode("utf-8")).hexdigest()
