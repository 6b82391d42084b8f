# -*- coding: utf-8 -*-
#
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import sys

from .specgraph import main

if __name__ == '__main__':
    sys.exit(main())
