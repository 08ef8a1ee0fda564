#pragma once

#include "tdcode/channel.hpp"
#include "tdcode/code.hpp"
#include "tdcode/decoder.hpp"
#include "tdcode/error.hpp"
#include "tdcode/oracle.hpp"
#include "tdcode/transform.hpp"
#include "tdcode/word.hpp"
