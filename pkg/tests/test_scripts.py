import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "name,args,expect",
    [
        ("reproduce_hadamard.py", [], "verdict=strongly-nonadditive-criteria-met"),
        ("greedy_family_sweep.py", ["--n-min", "9", "--n-max", "10"], "nonadditive"),
        ("sign_roundtrip.py", ["--trials", "20"], "20/20"),
    ],
)
def test_script_runs(name, args, expect):
    out = subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True, check=True)
    assert expect in out.stdout
