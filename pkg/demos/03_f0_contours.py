import math

import numpy as np

import jprosody as jp
from jprosody.fixtures import load_fixture

params = jp.F0Params()
print(params)

tree, exp = load_fixture("boost4N")

for boost in [True, False]:
    cfg = jp.ConstraintConfig(enable_boost_rephrasing=boost)
    ptree = jp.apply_all(jp.project(tree), cfg)

    regs = jp.compute_registers(ptree, params)
    print("boost" if boost else "no boost", np.round(regs, 3))

    c = jp.synthesize(ptree, params)
    print(len(c), "frames,", c.f0.min().round(1), "-", c.f0.max().round(1), "Hz")

    d = jp.measure_descents(c, exp["nouns"])
    print({k: round(v, 2) for k, v in d.items()}, jp.classify_boost(*d.values()))

print(12 * math.log2(params.downstep_factor))  # one plain downstep, about -6.17

# rise after each gap in the two lowering items
for fid in ["tree1", "tree2"]:
    tree, exp = load_fixture(fid)
    c = jp.synthesize(jp.apply_all(jp.project(tree)), params)
    rises = jp.measure_rises(c, exp["gaps"])
    print(fid, {k: round(v, 2) for k, v in rises.items()},
          jp.classify_initial_lowering(rises["A"], rises["B"], exp["cond"]))

# per-word peaks
for w in np.unique(c.pword):
    print(w, round(jp.word_peak(c, int(w)), 1))

print(jp.run_experiment().to_text())
