#!/usr/bin/env python


### needs a setup.py so that readthedocs.io can successfully build
##
#   tip from https://github.com/readthedocs/readthedocs.org/issues/7030#issuecomment-624669745
#
# [...] And Brett Cannon (a Python core developer) gives the minimum setup.py file:
#


import setuptools

if __name__ == "__main__":
    setuptools.setup()
