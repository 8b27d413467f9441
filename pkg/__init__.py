"""
Coulomb walk toolkit - two interacting walkers on a line
"""

'''

Run Commands:

python main.py presets
python main.py spectrum --preset bands_odd
python main.py catalog --phi 1 --k 0
python main.py evolve --preset boson_segment --name boson_segment_short --t-max 100
python scripts/run_presets.py

'''
