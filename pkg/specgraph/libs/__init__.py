# -*- coding: utf-8 -*-
#
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.
