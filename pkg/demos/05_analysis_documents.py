"""Analysis documents: the JSON container consumed by the command-line tool.

One document holds a control system, named density matrices and options.
The same commands are available programmatically through run_command and on
the shell through the ``liereach`` executable, e.g.

    liereach analyze-group --file demos/data/five_level.json
    liereach reachable ground superposed --file demos/data/five_level.json
    liereach classify-state mixed --file demos/data/five_level.json --output text
"""

import pathlib

from liereach import parse_document, serialize_document
from liereach.cli import run_command

path = pathlib.Path(__file__).parent / "data" / "five_level.json"
document = parse_document(path.read_text())
print(f"loaded document: system dimension {document.system.dim}, "
      f"states {sorted(document.states)}\n")

for command, names in [
    ("analyze-group", []),
    ("classify-state", ["ground"]),
    ("kinematic", ["ground", "superposed"]),
    ("reachable", ["ground", "superposed"]),
    ("transitive", ["ground"]),
]:
    result = run_command(command, document, names)
    shown = " ".join([command] + names)
    print(f"$ liereach {shown}")
    print(result.summary.replace("\n", "\n  "))
    print(f"(exit code {result.exit_code})\n")

round_trip = parse_document(serialize_document(document))
print("serialize/parse round trip preserves all values:",
      all((round_trip.states[k] == document.states[k]).all() for k in document.states))
