# -*- coding: utf-8 -*-
#
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.
#

__package__ = str("specgraph")

## import main here so shell script execution finds the egg
from .specgraph import main, run
from .libs.config import Config, Config_YAML
