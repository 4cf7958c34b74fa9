"""Bundled reference networks."""

import os
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .core import SignedGraph
from .io import parse_edge_list

#: set this environment variable to an edge-list path to replace the bundled
#: highland-tribes reconstruction with another coding of the network
TRIBES_PATH_ENV = "SIGNEDNET_TRIBES_PATH"


def highland_tribes(path: Optional[Union[str, Path]] = None) -> SignedGraph:
    """Gahuku-Gama alliance network (Read 1954), weight magnitude 0.1.

    16 subtribes in three mutually hostile alliance blocs; friendly ("rova")
    ties are positive, hostile ("hina") ties negative.  The bundled edge list
    is a reconstruction from the classic three-bloc coding of this network;
    pass ``path`` (or set ``SIGNEDNET_TRIBES_PATH``) to load another published
    coding instead.  See the README's data-provenance section.
    """
    override = path or os.environ.get(TRIBES_PATH_ENV)
    if override:
        return parse_edge_list(Path(override).read_text())
    text = resources.files("signednet").joinpath("data/highland_tribes.edges").read_text()
    return parse_edge_list(text)
