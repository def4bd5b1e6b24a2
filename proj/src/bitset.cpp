#include "monogrid/bitset.hpp"
