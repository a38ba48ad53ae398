"""Random rank-2 fans: verdict statistics and certificate checks."""
import collections
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from oracles import random_rank2_fan, sweep_components  # noqa: E402

from hartogs_fans.hartogs import check_hartogs, verify_certificate  # noqa: E402

rng = random.Random(0)
tally = collections.Counter()
for _ in range(200):
    fan, arc, pieces = random_rank2_fan(rng)
    rep = check_hartogs(fan)
    tally[rep.status] += 1
    if rep.compactifiable_10 is not None:
        assert rep.compactifiable_10 == (sweep_components(arc, pieces) == 1)
    if rep.hartogs is not None:
        assert verify_certificate(rep, fan)

for status, n in tally.most_common():
    print(f"{n:4d}  {status}")
