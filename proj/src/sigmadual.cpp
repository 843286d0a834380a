#include "rootsmith/sigmadual.hpp"
