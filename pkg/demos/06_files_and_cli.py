"""
State files and the command line
================================

States and density matrices are stored as small JSON documents; the
``qudit-concurrence`` command reads them or uses catalog names directly.
"""

import tempfile
from pathlib import Path

from qudit_concurrence import catalog_state, load_state, save, werner
from qudit_concurrence.cli import main

tmp = Path(tempfile.mkdtemp())
save(catalog_state("so3.chi00"), tmp / "singlet.json")
save(werner(0.5), tmp / "werner.json")
print((tmp / "singlet.json").read_text())

print(load_state(tmp / "werner.json"))

# the same calls as `qudit-concurrence ...` from a shell
main(["concurrence", "--file", str(tmp / "singlet.json")])
main(["mixed", "--file", str(tmp / "werner.json")])
main(["entropy-bounds", "--points", "5", "--format", "csv"])
main(["verify-algebra", "--dim", "4"])
