"""Shared fixtures: the published example grids as parsed masks."""

import pytest

from lattice16 import lattice

# Grid strings list rows beta=3 first; X marks a contributing site.
GRIDS = {
    # The six illustrative subsets (three PPT-entangled-by-cross, three
    # needing the k=1 witness).
    "ex1_left_n8": "..../XX.X/XX../XXX.",
    "ex1_right_n10": "XXX./X.X./.X.X/XXX.",
    "ex2_left_n8": "XX.X/X.X./XX.X/....",
    "ex2_right_n10": "XX.X/X.X./.X.X/XX.X",
    "ex3_left_n10": ".XXX/XXXX/.XXX/....",
    "ex3_right_n11": "XXX./XXXX/XXX./...X",
    # Reference separable states with an empty column and row.
    "rho9": ".XXX/.XXX/.XXX/....",
    "rho8": ".XXX/.X.X/.XXX/....",
    "rho6": ".XX./.XX./.XX./....",
    # The six-site state with split kappa-zero crosses.
    "n6_item4": "...X/..X./XX../XX..",
    # The four states left undecided by the reduction-map criterion.
    "open_n8": ".XXX/.X.X/.X.X/X...",
    "open_n9": ".XXX/.X.X/.XXX/X...",
    "open_n10": ".XXX/.XXX/.XXX/X...",
    "open_n11": "X..X/XX.X/XXX./XXX.",
}


@pytest.fixture(scope="session")
def grids():
    return {name: lattice.parse_subset(g) for name, g in GRIDS.items()}
