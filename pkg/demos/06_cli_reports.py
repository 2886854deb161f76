"""
Reports from the command line
=============================

The ``centerfocus`` command reads one system as JSON and writes a report.
The same entry point is callable from Python.
"""

# %%
import json
import tempfile
from pathlib import Path

import jsonschema

from centerfocus import cli

text = '{"n":2,"P1":{"p10":"1","p01":"0"},"Pn":{"2,0":"1","0,2":"-1"}}'
path = Path(tempfile.mkdtemp()) / "focus.json"
path.write_text(text)

# %% Text report with the numeric cross-check.
cli.main(["analyze", "--input", str(path), "--numeric", "--format", "text"])

# %% JSON report, validated against the shipped schema.
report, code = cli.run(cli.AnalysisRequest("analyze", str(path)))
jsonschema.validate(report, cli.report_schema())
print(code, json.dumps(report["focal"]["values"]))

# %% Systems round-trip through the input format.
sys = cli.parse_text(text)
print(cli.render(sys), cli.parse_text(cli.render(sys)) == sys)

# %% Self-test of the combinatorial identities; exit code 2 would mean a failure.
print(cli.main(["selftest", "--format", "text"]))
