#-*- coding: utf-8 -*-

import os
import codecs
from setuptools import setup

def read(name):
    file_name = os.path.join(os.path.abspath(os.path.dirname(__file__)), name)
    return codecs.open(file_name, "r", "utf-8").read()

setup(
    name='curved_hpl',
    version=read('curved_hpl/version.txt').strip(),
    description="Exact curved homological perturbation over the rationals.",
    long_description=read('README.md'),
    keywords='homological perturbation lemma, curved complexes, homological algebra',
    license='GPLv3',
    packages=['curved_hpl'],
    install_requires=[
        'click',
        'sympy>=1.12'],
    package_data={'curved_hpl': ['version.txt']},
    entry_points={
        'console_scripts': ['curved-hpl=curved_hpl.cli:main']},
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Operating System :: OS Independent',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',

        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: 3.13'
    ],
    long_description_content_type = "text/markdown"

)
