#ifndef BINDCORE_BINDCORE_HPP
#define BINDCORE_BINDCORE_HPP

#include "bindcore/binder.hpp"
#include "bindcore/box.hpp"
#include "bindcore/combinators.hpp"
#include "bindcore/debug.hpp"
#include "bindcore/environment.hpp"
#include "bindcore/var.hpp"
#include "bindcore/varpos.hpp"

#endif  // BINDCORE_BINDCORE_HPP
