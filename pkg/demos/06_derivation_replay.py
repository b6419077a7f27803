"""Replaying equational derivations step by step.

A script rewrites the goal's left side into its right side.  Every step
names a rule, a direction, an exact position and substitution, and the
expected result; the checker verifies each claim and never searches.
Corrupting any single substitution makes the replay fail at that step.
"""

from varietylab import render_script, replay, shipped_scripts
from varietylab.verify import corrupt_step_substitution

scripts = shipped_scripts()
print(f"{len(scripts)} bundled scripts:")
for script in scripts:
    result = replay(script)
    print(f"  [{script.mode.value}] {script.name:24} goal {str(script.goal):24} "
          f"{'PASS' if result.passed else 'FAIL'}")

print()
print("The shortest one in full:")
print(render_script(scripts[2]))

print("Negative control: corrupt one substitution of one step.")
bad = corrupt_step_substitution(scripts[2], 0)
result = replay(bad)
print(f"  verdict: passed={result.passed}, failed step={result.step}")
print(f"  reason: {result.message}")
