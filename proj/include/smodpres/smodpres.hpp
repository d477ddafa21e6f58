#pragma once

#include "words.hpp"
#include "perm.hpp"
#include "presentations.hpp"
#include "sphere_rep.hpp"
#include "cover.hpp"
#include "abelianize.hpp"
#include "consistency.hpp"
#include "lemmas.hpp"
