#include "sigcolor/girth5.hpp"
