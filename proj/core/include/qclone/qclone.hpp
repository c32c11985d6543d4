#pragma once

#include "qclone/hilbert.hpp"
#include "qclone/weyl_bell.hpp"
#include "qclone/mub.hpp"
#include "qclone/cloner.hpp"
#include "qclone/families.hpp"
#include "qclone/optimizer.hpp"
#include "qclone/serialization.hpp"
