#include "sigcolor/sweeps.hpp"
