#-*- coding:utf-8 -*-

from .errors import *
from .core import *
from .tree import (SignedIncreasingTree, IncreasingTree, tree_from_literal,
    tree_to_literal, tree_from_dict, tree_to_dict, inorder, minimal_path,
    pleaf, maximal_path_from)
from .families import *
from .triangles import *
from .bijections import *
from .cdindex import *
from .verify import CheckReport, run_checks, check_conjecture


__version__ = '0.1.0'
