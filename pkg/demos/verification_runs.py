"""
Running the claim harnesses
===========================

A small exhaustive stream, a dense random run and a parameter sweep.
With nauty's ``geng`` on the PATH the exhaustive run covers every
connected graph on 8 vertices; otherwise it falls back to the committed
fixture of all graphs up to 8 vertices.
"""
import shutil
import subprocess
from pathlib import Path

from toughspec.verify import (sample_t_tough, verify_join_comparison, verify_one_tough,
                              verify_spectral_bounds)

fixture = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs_le8.g6"
geng = shutil.which("geng")
if geng:
    lines = subprocess.run([geng, "-q", "-c", "8"], capture_output=True, check=True).stdout
    stream = lines.splitlines(keepends=True)
else:
    stream = str(fixture)

rep = verify_spectral_bounds(stream)
print(rep.summary(), "\n")

# min degree 2 graphs on 10+ vertices are needed before anything is tested
print(verify_one_tough(stream, 2).summary(), "\n")

rep = sample_t_tough(1, 5000, seed=7)
print(rep.summary())
for rec in rep.equality_cases[:3]:
    print("  ", rec.tsv(6))
print()

print(verify_join_comparison(200, seed=42).summary())
