#include "grlab/cli/cli.hpp"

#include "grlab/cli/cli_impl.hpp"
