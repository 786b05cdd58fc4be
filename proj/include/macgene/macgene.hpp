#pragma once

// Umbrella header for the whole library.

#include "macgene/analysis.hpp"
#include "macgene/bmp.hpp"
#include "macgene/cipher.hpp"
#include "macgene/error.hpp"
#include "macgene/mac_key.hpp"
#include "macgene/rng.hpp"
#include "macgene/system_mac.hpp"
#include "macgene/wire.hpp"
