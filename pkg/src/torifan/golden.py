"""Published data for the Sato threefold, used as fixed reference values."""

SATO_RAYS = {
    "x1": (1, 0, 1),
    "x2": (0, 1, 0),
    "x3": (-1, 3, 0),
    "x4": (0, -1, 0),
    "y1": (0, 0, 1),
    "y2": (0, 0, -1),
    "z1": (0, 1, 1),
    "z2": (0, 2, 1),
}

SATO_MAX_CONES = {
    "tau1": ("x1", "x2", "z2"),
    "tau2": ("x1", "z1", "z2"),
    "tau3": ("x1", "z1", "y1"),
    "tau4": ("x3", "y1", "z1"),
    "tau5": ("x3", "z2", "z1"),
    "tau6": ("x3", "z2", "x2"),
    "sigma3": ("x1", "x2", "y2"),
    "sigma4": ("x2", "x3", "y2"),
    "sigma5": ("x3", "x4", "y1"),
    "sigma6": ("x3", "x4", "y2"),
    "sigma7": ("x4", "x1", "y1"),
    "sigma8": ("x4", "x1", "y2"),
}

SATO_CARTIER = {
    "tau1": (-2, -1, 1),
    "tau6": (-2, -1, 1),
    "sigma3": (-2, -1, 1),
    "sigma4": (-2, -1, 1),
    "tau2": (0, 0, -1),
    "tau3": (0, 0, -1),
    "tau4": (1, 0, -1),
    "tau5": (1, 0, -1),
    "sigma5": (4, 1, -1),
    "sigma6": (4, 1, 1),
    "sigma7": (0, 1, -1),
    "sigma8": (-2, 1, 1),
}
