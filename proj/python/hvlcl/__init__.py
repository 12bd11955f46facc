"""Reversible data hiding in encrypted images.

Adaptive multi-MSB labeling with a Huffman-coded label map: encode with an
encryption key, embed with a data-hiding key, then extract the payload and
recover the original image bit-exactly, each with its own key alone.
"""

from ._hvlcl import (
    analyze_image,
    build_label_map,
    capacity_of,
    embedding_rate,
    hider_embed,
    keystream_bytes,
    label_of,
    med_predict,
    owner_encode,
    psnr,
    read_pgm,
    receiver_extract,
    receiver_recover,
    ssim,
    write_pgm,
)

__all__ = [
    "analyze_image",
    "build_label_map",
    "capacity_of",
    "embedding_rate",
    "hider_embed",
    "keystream_bytes",
    "label_of",
    "med_predict",
    "owner_encode",
    "psnr",
    "read_pgm",
    "receiver_extract",
    "receiver_recover",
    "ssim",
    "write_pgm",
]
