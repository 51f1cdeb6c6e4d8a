#include <goppa/fields.hpp>
// placeholder
