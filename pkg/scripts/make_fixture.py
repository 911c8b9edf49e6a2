"""Regenerate tests/data/camera256.pgm from scikit-image's public-domain camera image."""
from pathlib import Path

from skimage import data

from chaodna.imageio import resize_nn, save_pgm

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "camera256.pgm"

if __name__ == "__main__":
    save_pgm(OUT, resize_nn(data.camera(), 256, 256))
    print(OUT)
