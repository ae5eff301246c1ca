#include "qdl/quadrature.hpp"

// Header-only; this translation unit just anchors the target.
namespace qdl {}
