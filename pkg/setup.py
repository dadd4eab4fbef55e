#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2008 John Paulett (john -at- paulett.org)
# Copyright (C) 2009-2013 David Aguilar (davvid -at- gmail.com)
# Copyright (C) 2013 Xingchen Yu (initialxy -at- gmail.com)
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

import os
try:
    import setuptools as setup_mod
except ImportError:
    import distutils.core as setup_mod

here = os.path.dirname(__file__)
version = os.path.join(here, 'lexsimp', 'version.py')
scope = {}
exec(open(version).read(), scope)

SETUP_ARGS = dict(
    name="lexsimp",
    version=scope['VERSION'],
    description="Lexical simplification of medical text with aligned "
            "ontologies, an n-gram language model and word frequencies",
    long_description = "lexsimp replaces medical terms with layman "
            "alternatives collected from several aligned ontologies. "
            "Candidate terms are ranked by a weighted mix of the language "
            "model score of the rewritten sentence and the frequency of "
            "the term's rarest word, and rewriting repeats until the "
            "sentence stops changing. The package also trains the n-gram "
            "model, tunes the mixing weight on a development set and "
            "scores outputs with BLEU, SARI and Simplification Gain over "
            "pairwise human judgments.",
    author="The lexsimp developers",
    license="BSD",
    platforms=['POSIX', 'Windows'],
    keywords=['text simplification', 'lexical simplification', 'medical',
            'ontology', 'language model', 'n-gram', 'SARI', 'BLEU'],
    classifiers=[
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Text Processing :: Linguistic",
        "Topic :: Scientific/Engineering :: Medical Science Apps.",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
    ],
    options={'clean': {'all': 1}},
    packages=["lexsimp"],
    python_requires='>=3.8',
    install_requires=['six', 'simplejson', 'regex', 'numpy', 'sacrebleu>=2.0'],
    extras_require={
        'wordfreq': ['wordfreq'],
        'ujson': ['ujson'],
    },
    entry_points={
        'console_scripts': ['lexsimp = lexsimp.cli:main'],
    },
)


if __name__ == '__main__':
    setup_mod.setup(**SETUP_ARGS)
