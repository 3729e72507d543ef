#include "sigcolor/discharging.hpp"
