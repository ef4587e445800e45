#
# Step words over {N, E}
#
from mbg.common.errors import BadParams

__all__ = ['check_word', 'word_to_set', 'set_to_word', 'swap_steps', 'reverse_word']


def check_word(word):
    """
    Returns the word in upper case, or raises BadParams if it uses a
    letter other than N and E.
    """
    word = str(word).strip().upper()
    if any(c not in 'NE' for c in word):
        raise BadParams("A step word may only contain N and E: '%s'" % word)
    return word


def word_to_set(word):
    """The positions (0-based) of the North steps"""
    return frozenset(i for i,c in enumerate(word) if c == 'N')


def set_to_word(positions, length):
    return ''.join('N' if i in positions else 'E' for i in range(length))


def swap_steps(word):
    return word.translate(str.maketrans('NE', 'EN'))


def reverse_word(word):
    return word[::-1]
