"""The wire-grid experiment replayed as a scenario, step by step.

A two-slit interferometer forms fringes; thin wires are parked on the dark
fringes; then one slit's image is watched. Arrival at the image proves, via
the declared bridge axiom, which slit the photon used. The puzzle: did the
photon 'have' a path while the fringes (which need both slits) were intact?

Here the puzzle dissolves: during flight the path atom P is undecided, so
any formula fixing its truth value is not even grammatical in the current
theory. The path becomes true only at the detection, and the retroactive
assertion about the flight interval dates from the detection too.

Run: python demos/wire_grid_walkthrough.py
"""

from nafl import builtin_scenario, run_scenario

scenario = builtin_scenario("afshar")

print("The cast:")
for name, gloss in scenario.atoms:
    print(f"  {name}: {gloss}")
print("\nBridge axioms (declared before the run, truth pending):")
for bridge in scenario.bridges:
    print(f"  {bridge}")
print("\nEvents:")
for event in scenario.events:
    print(f"  {event.describe()}")

print("\n" + "=" * 64)
report = run_scenario(scenario)
print(report.render())
print("=" * 64)

print("""
Reading the report:

* Mid-flight (t1) someone tries to declare P & ~P, reading the intact
  fringes plus the bridge as 'the photon used both one slit and not one
  slit'. The theory syntax rejects the declaration; the run logs the
  rejection as expected. A contradiction is never accepted as an axiom.

* At t2 the image detection declares Q; the bridge makes P provable, so
  P flips from neither to true, and the retroactive row asserts P over
  the flight interval, visible only from t2.

* The model-kind audit confirms one interpretation at every instant:
  nonclassical while P is undecided, classical after. Distinguishability
  and visibility each reach 1 only at times when the other is 0.

Compare: python -m nafl run afshar_nogrid (same logic, no grid), and
python -m nafl run delayed_choice (the choice happens after the flight;
the timeline is indifferent to when the bridge gets used).
""")
