"""Validates a freshly generated verify report against the published schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main(cli: str, schema_path: str) -> int:
    schema = json.loads(Path(schema_path).read_text())
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "report.json"
        for extra in ([], ["--timing"]):
            subprocess.run(
                [cli, "verify", "--ids", "ZOU-1,EX-2.1,LEM-2.2,PROP-4.1,THM-3.1", "--dims", "2,3",
                 "--trials", "100", "--out", str(out), *extra],
                check=True, stdout=subprocess.DEVNULL)
            report = json.loads(out.read_text())
            jsonschema.validate(report, schema, cls=jsonschema.Draft202012Validator)
            print(f"report with {len(report['outcomes'])} outcomes {' '.join(extra)} validates")
    broken = dict(report, catalog_version=1)
    try:
        jsonschema.validate(broken, schema, cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError:
        print("malformed report rejected")
        return 0
    print("malformed report was accepted")
    return 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
