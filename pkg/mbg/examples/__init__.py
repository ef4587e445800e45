# mbg.examples

from . import catalan3
from . import k4
from . import notwogoods
from . import octahedron
from . import prism
