import numpy as np


def random_rotation(d, rng):
    """Uniformly random proper rotation matrix via QR with sign fixing."""
    q, r = np.linalg.qr(rng.normal(size=(d, d)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
