"""
Permutation Pattern Utilities Package

.. rubric:: Subpackages

.. autosummary::
   :toctree:

   permpattern_utils.harness

.. rubric:: Submodules

.. autosummary::
   :toctree:

   bijections
   cli
   core
   numbers
   patterns
   structures
   utils
"""

__version__ = "0.1.0"
