#include "molgate/units.hpp"

// All of molgate::units is inline; this TU anchors the header in the library.
