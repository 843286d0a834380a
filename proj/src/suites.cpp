#include "rootsmith/suites.hpp"
