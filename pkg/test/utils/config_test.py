#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

import os
from dataclasses import fields
from unittest import TestCase

from curved_hpl import config_errors
from curved_hpl.config import CONF_DIR, SECTIONS, Settings
from curved_hpl.scalar import Context

from ..init import CONF_DIR as TEST_CONF_DIR

class Test(TestCase):
    def test_conf_dir(self):
        "it should read the test configuration directory"
        self.assertEqual(CONF_DIR, os.path.abspath(TEST_CONF_DIR))

    def test_defaults(self):
        settings = Settings()
        self.assertEqual(settings.context, Context(4, 4))
        self.assertEqual(settings.she_eps_order, 6)
        self.assertEqual(settings.cap, 64)

    def test_load(self):
        "it should load curved_hpl.ini"
        settings = Settings.load()
        self.assertEqual(settings.max_rank, 2)
        self.assertEqual(settings.max_span, 3)
        self.assertEqual(settings.context, Context(4, 4))

    def test_partial(self):
        "missing values should keep their defaults"
        settings = Settings.load('partial.ini')
        self.assertEqual(settings.context, Context(4, 2))
        self.assertEqual(settings.max_rank, 4)

    def test_missing(self):
        with self.assertRaises(config_errors.MissingConfigFile):
            Settings.load('no_such_file.ini')

    def test_not_an_integer(self):
        with self.assertRaises(config_errors.MalformedConfigFile) as cm:
            Settings.load('not_an_integer.ini')
        self.assertEqual(cm.exception.param, 'truncation.z_order')
        self.assertIn('Not an integer', str(cm.exception))

    def test_not_positive(self):
        with self.assertRaises(config_errors.MalformedConfigFile) as cm:
            Settings.load('not_positive.ini')
        self.assertEqual(cm.exception.param, 'neumann.cap')

    def test_override(self):
        "None values should be ignored"
        settings = Settings().override(z_order=2, eps_order=None, cap=8)
        self.assertEqual(settings.context, Context(2, 4))
        self.assertEqual(settings.cap, 8)

    def test_sections(self):
        "every setting should be read from exactly one section, its default staying on Settings"
        self.assertEqual(set(SECTIONS), {field.name for field in fields(Settings)})
        self.assertEqual(Settings.load('partial.ini').she_eps_order, Settings().she_eps_order)
