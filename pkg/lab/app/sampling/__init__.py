"""Random operator classes, sharpness search and soundness sweeps."""
