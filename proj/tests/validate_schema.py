"""Validate `octacube report --format json` on every example against the published schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main():
    cli, schema_path, data_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for sd in sorted(pathlib.Path(data_dir).glob("*.sd")):
        out = subprocess.run([cli, "report", "--format", "json", str(sd)], capture_output=True, text=True)
        if out.returncode != 0:
            print(f"{sd.name}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(out.stdout)))
        for e in errors[:3]:
            print(f"{sd.name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        print(f"{sd.name}: {'ok' if not errors else 'INVALID'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
