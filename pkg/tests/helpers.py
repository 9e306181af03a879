import json
import os
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
TARGETS = ("ces", "forest", "parking", "prufer", "factorization")


def cli_inputs():
    return json.loads((FIXTURES / "cli_inputs.json").read_text())


def conversion_argv(item, target, as_json=False):
    argv = ["convert", "--from", item["from"], "--to", target]
    if "route" in item:
        argv += ["--prufer-route", item["route"]]
    if as_json:
        argv.append("--json")
    return argv + [item["payload"]]


def run_cli(argv, hash_seed="0", stdin=None):
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    return subprocess.run(
        [sys.executable, "-m", "excforest", *argv],
        input=stdin, capture_output=True, text=True, env=env, check=False,
    )
