"""Runs the CLI over a spread of commands and validates every document against docs/schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

BIN, SCHEMAS, GOLDEN = map(pathlib.Path, sys.argv[1:4])

resources = {}
for path in SCHEMAS.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    Draft202012Validator.check_schema(doc)
    resources[path.name] = Resource.from_contents(doc)
registry = Registry().with_resources(resources.items())

BY_TAG = {
    "taulike/poset/1": "poset.schema.json",
    "taulike/linearization/1": "linearization.schema.json",
    "taulike/embedding/1": "embedding.schema.json",
    "taulike/validation/1": "validation.schema.json",
    "taulike/decode/1": "decode.schema.json",
    "taulike/verify/1": "verify.schema.json",
    "taulike/error/1": "error.schema.json",
}

with tempfile.TemporaryDirectory() as tmp:
    fuf = pathlib.Path(tmp) / "fuf.json"
    subprocess.run([BIN, "gadget", "fuf", "--sets", "2;0;1", "--kind", "zeta", "--out", fuf], check=True)
    commands = [
        (["linearize", "--kind", "omega", "--family", "antichain", "--blocks", "6"], 0),
        (["linearize", "--kind", "omega-star", "--family", "omega-star", "--blocks", "6"], 0),
        (["linearize", "--kind", "zeta", "--family", "zeta-skewed", "--blocks", "6"], 0),
        (["linearize", "--kind", "omega-omega-star", "--family", "range", "--f", "perm:2,0,1", "--elements", "10"], 0),
        (["linearize", "--kind", "zeta", "--input", str(fuf)], 0),
        (["embed", "--kind", "omega", "--family", "embed-gadget", "--f", "swap:2", "--blocks", "6"], 0),
        (["embed", "--kind", "omega-omega-star", "--family", "omega-omega-star", "--elements", "6"], 0),
        (["embed", "--kind", "zeta", "--family", "zeta", "--blocks", "6"], 0),
        (["embed", "--kind", "omega-star", "--family", "fence", "--size", "5"], 0),
        (["gadget", "range", "--f", "perm:1,0,2", "--elements", "8"], 0),
        (["gadget", "embed", "--f", "identity", "--elements", "8"], 0),
        (["gadget", "fuf", "--sets", "1;2", "--kind", "omega-star"], 0),
        (["decode", "fuf", "--input", str(fuf)], 0),
        (["decode", "false-stages", "--f", "prefix:8,3,11,5,0,14,2", "--horizon", "40", "--elements", "10"], 0),
        (["decode", "range", "--f", "perm:3,1,0,2", "--elements", "8"], 0),
        (["verify", "--input", str(fuf), "--order", "0,1,2,3,4,5,6,7,8"], 0),
        (["verify", "--family", "range", "--f", "perm:1,0", "--kind", "omega-omega-star", "--elements", "8"], 0),
        (["oracle", "--family", "embed-gadget", "--f", "swap:2", "--elements", "30"], 0),
        (["verify", "--input", str(GOLDEN / "cycle_poset.json")], 1),
        (["linearize", "--kind", "omega", "--family", "zeta"], 1),
    ]
    failures = 0
    for args, want in commands:
        run = subprocess.run([BIN, *args], capture_output=True, text=True)
        doc = json.loads(run.stdout) if run.stdout else None
        if run.returncode != want or doc is None:
            print(f"FAIL exit {run.returncode} (want {want}): {' '.join(args)}\n{run.stderr}")
            failures += 1
            continue
        name = BY_TAG.get(doc.get("schema"))
        validator = Draft202012Validator({"$ref": name}, registry=registry)
        errors = sorted(validator.iter_errors(doc), key=str)
        for e in errors[:3]:
            print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
    print(f"{len(commands) - failures}/{len(commands)} documents conform")
    sys.exit(1 if failures else 0)
