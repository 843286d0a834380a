#include "rootsmith/report.hpp"
