"""
The chordx package decides whether square-free monomial ideals have linear
resolutions over fields of characteristic 2, both via the homology of induced
subcomplexes and via the chordality of simplicial complexes.
"""
