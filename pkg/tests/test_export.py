# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import os

import pytest

from specgraph.libs.config import Config
from specgraph.libs.export import atomic_path, export_to_json, implemented_exporters


class TestRegistry:
    def test_every_format_has_an_exporter(self):
        assert sorted(implemented_exporters()) == sorted(Config.formats())

    def test_docstring(self):
        assert implemented_exporters.__doc__.strip().startswith("Enum-like instance")

    def test_rejects_other_reports(self, tmp_path):
        with pytest.raises(TypeError):
            export_to_json({'suite': 'search'}, output_file=str(tmp_path / 'out.json'))


class TestAtomicPath:
    def test_replaces_target(self, tmp_path):
        target = tmp_path / 'out.json'
        with atomic_path(str(target)) as tmp:
            with open(tmp, 'w') as f:
                f.write("{}\n")
        assert target.read_text() == "{}\n"
        assert os.listdir(tmp_path) == ['out.json']

    def test_failure_leaves_nothing(self, tmp_path):
        target = tmp_path / 'out.json'
        with pytest.raises(RuntimeError):
            with atomic_path(str(target)):
                raise RuntimeError("interrupted")
        assert os.listdir(tmp_path) == []
