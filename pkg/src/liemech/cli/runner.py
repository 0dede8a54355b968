"""Execute a parsed scenario and write its data files plus a manifest."""

import datetime
import hashlib
import json
from pathlib import Path

import numpy as np

from liemech import __version__
from liemech.cli.scenario import HAMILTONIAN_SYSTEM, scenario_digest, serialize
from liemech.dynamics import conservation_drifts, fmt, integrate
from liemech.jolt import jolt_report, report_to_csv, report_to_text
from liemech.symplectic import central_potential, harmonic_potential, hamiltonian_flow, particle_hamiltonian

TOOL = "liemech"
MANIFEST = "manifest.json"


def _sha256(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write(path, text):
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)


def build_hamiltonian(cfg):
    kind, m = cfg["potential"], cfg["mass"]
    if kind == "free":
        return particle_hamiltonian(m)
    k = cfg["k"]
    if kind == "harmonic":
        return particle_hamiltonian(m, *harmonic_potential(k))
    return particle_hamiltonian(m, *central_potential(lambda r: -k / r, lambda r: k / (r * r)))


def _run_hamiltonian(sc, out_dir, files):
    ham = build_hamiltonian(sc.hamiltonian)
    q0, p0 = sc.initial["q"], sc.initial["p"]
    n = len(q0)
    z = hamiltonian_flow(ham, np.array(q0 + p0), sc.dt, sc.steps, sc.method)
    t = np.arange(len(z)) * sc.dt
    if sc.output["trajectory"] == "yes":
        header = ",".join(["t"] + [f"q{i + 1}" for i in range(n)] + [f"p{i + 1}" for i in range(n)])
        rows = [",".join(fmt(x) for x in (t[k], *z[k])) for k in range(len(z))]
        _write(out_dir / "trajectory.csv", "\n".join([header] + rows) + "\n")
        files.append("trajectory.csv")
    energy = np.array([ham(zk) for zk in z])
    drifts = {"energy": float(np.max(np.abs(energy - energy[0])))}
    if n == 2:
        # planar angular momentum x p_y - y p_x; conserved for every offered potential
        ell = z[:, 0] * z[:, 3] - z[:, 1] * z[:, 2]
        drifts["angular_momentum"] = float(np.max(np.abs(ell - ell[0])))
    return len(z) - 1, drifts


def _run_body(sc, out_dir, files):
    params = sc.params()
    traj = integrate(sc.system, params, sc.state0(), sc.dt, sc.steps, sc.method, sc.controls())
    if sc.output["trajectory"] == "yes":
        traj.write_csv(out_dir / "trajectory.csv")
        files.append("trajectory.csv")
    if sc.wants_jolt:
        rep = jolt_report(traj, params, sc.output["thresholds"])
        _write(out_dir / "jolt.csv", report_to_csv(rep))
        _write(out_dir / "jolt_report.txt", report_to_text(rep))
        files += ["jolt.csv", "jolt_report.txt"]
    return len(traj) - 1, conservation_drifts(traj, params)


def run(sc, out_dir):
    """Run ``sc``, writing files under ``out_dir``; returns the manifest dict.

    Data files carry no timestamps. The manifest's ``data`` section is
    deterministic too; only ``metadata`` records when the run happened.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write(out_dir / "scenario.canonical", serialize(sc))
    files = ["scenario.canonical"]
    if sc.system == HAMILTONIAN_SYSTEM:
        steps, drifts = _run_hamiltonian(sc, out_dir, files)
    else:
        steps, drifts = _run_body(sc, out_dir, files)
    manifest = {
        "data": {
            "tool": TOOL,
            "version": __version__,
            "scenario_digest": scenario_digest(sc),
            "system": sc.system,
            "steps": steps,
            "files": {name: _sha256(out_dir / name) for name in files},
            "conservation_drift": {k: float(v) for k, v in drifts.items()},
        },
        "metadata": {
            "created": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        },
    }
    _write(out_dir / MANIFEST, json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest
