// Copyright 2026 The Scrolly Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fixed web resources emitted into every bundle. The runtime here is the
// placeholder player: it evaluates story.json with the same timeline rules
// as the compiler and draws each layer as a labeled block.

#include "scrolly/site_compiler.hpp"

namespace scrolly::resources {

std::string_view index_html_template() {
  return R"html(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>{{TITLE}}</title>
<link rel="stylesheet" href="style.css">
</head>
<body>
<div id="scrolly-track"><div id="scrolly-stage" aria-live="polite"></div></div>
<div id="scrolly-decision" hidden></div>
<nav id="scrolly-tree" aria-label="Story overview"></nav>
<noscript>This story needs JavaScript to play.</noscript>
<script src="runtime.js" data-story="story.json"></script>
</body>
</html>
)html";
}

std::string_view style_css() {
  return R"css(html, body {
  margin: 0;
  padding: 0;
  background: #101418;
  color: #e8ecef;
  font-family: system-ui, sans-serif;
}
#scrolly-track {
  position: relative;
  width: 100%;
}
#scrolly-stage {
  position: fixed;
  inset: 0 220px 0 0;
  overflow: hidden;
}
.scrolly-layer {
  position: absolute;
  inset: 8% 10%;
  display: flex;
  flex-direction: column;
  align-items: center;
  justify-content: center;
  border: 1px solid #3a4754;
  border-radius: 6px;
  background: rgba(24, 32, 40, 0.85);
  box-sizing: border-box;
  padding: 1.5rem;
}
.scrolly-layer .label {
  position: absolute;
  top: 0.4rem;
  left: 0.6rem;
  font-size: 0.75rem;
  color: #8aa0b4;
}
.scrolly-layer img, .scrolly-layer video {
  max-width: 100%;
  max-height: 70vh;
}
.scrolly-layer pre {
  font-size: 0.8rem;
  white-space: pre-wrap;
}
.scrolly-error {
  color: #ff9b8a;
}
#scrolly-decision {
  position: fixed;
  left: 0;
  right: 220px;
  bottom: 12%;
  text-align: center;
}
#scrolly-decision button {
  margin: 0 0.5rem;
  padding: 0.6rem 1.2rem;
  font-size: 1rem;
  border-radius: 4px;
  border: 1px solid #5b8bd0;
  background: #1d2a3a;
  color: #e8ecef;
  cursor: pointer;
}
#scrolly-tree {
  position: fixed;
  top: 0;
  right: 0;
  bottom: 0;
  width: 220px;
  overflow-y: auto;
  padding: 1rem 0.5rem;
  box-sizing: border-box;
  border-left: 1px solid #26313c;
  font-size: 0.8rem;
}
#scrolly-tree ul {
  list-style: none;
  padding-left: 0.9rem;
  margin: 0;
}
#scrolly-tree .glyph {
  display: inline-block;
  width: 0.8rem;
  height: 0.8rem;
  margin-right: 0.4rem;
  border-radius: 50%;
  border: 3px solid #3d7bd9;
  vertical-align: middle;
}
#scrolly-tree .visited > .glyph {
  border-color: #8a8f94;
}
#scrolly-tree .current > .glyph {
  background: #f2c94c;
}
)css";
}

std::string_view placeholder_runtime_js() {
  return R"js((function () {
  'use strict';

  var script = document.currentScript;
  var storyUrl = (script && script.getAttribute('data-story')) || 'story.json';
  var SUPPORTED_VERSION = 1;

  function clamp(v, lo, hi) { return Math.min(hi, Math.max(lo, v)); }

  function ease(kind, t) {
    t = clamp(t, 0, 1);
    return kind === 'smoothstep' ? t * t * (3 - 2 * t) : t;
  }

  function Story(desc) {
    var self = this;
    this.desc = desc;
    this.segments = {};
    desc.segments.forEach(function (seg) { self.segments[seg.id] = seg; });
  }

  Story.prototype.children = function (id) {
    return this.desc.treeChildren[id] || [];
  };

  Story.prototype.isDecision = function (id) {
    return this.segments[id].headKind === 'decision';
  };

  Story.prototype.path = function (decisions) {
    var path = [this.desc.root];
    for (;;) {
      var current = path[path.length - 1];
      var children = this.children(current);
      if (!children.length) break;
      if (this.isDecision(current)) {
        if (!(current in decisions)) break;
        path.push(children[decisions[current]].id);
      } else {
        path.push(children[0].id);
      }
    }
    return path;
  };

  // Same rules as the compiler's evaluator: steps laid end to end, one
  // window of transitionWindowPx centered on every boundary.
  Story.prototype.evaluate = function (scroll, decisions) {
    var self = this;
    var cfg = this.desc.config;
    var W = cfg.transitionWindowPx;
    var half = W / 2;
    var path = this.path(decisions);
    var steps = [];
    var total = 0;
    path.forEach(function (id, index) {
      self.segments[id].steps.forEach(function (step) {
        steps.push({ step: step, segment: id, index: index, offset: total });
        total += step.extentPx;
      });
    });
    var state = { visible: [], total: total, clamp: null, decision: null, path: path };
    var last = path[path.length - 1];
    var s = scroll;
    if (this.isDecision(last) && this.children(last).length) {
      state.clamp = total - half;
      if (s >= state.clamp) {
        state.decision = last;
        s = state.clamp;
      }
    }
    s = clamp(s, 0, total);
    state.scroll = s;
    var i = steps.length - 1;
    while (i > 0 && steps[i].offset > s) i--;
    state.segment = steps[i].segment;
    state.stepExtent = steps[i].step.extentPx;

    var b = null;
    if (i >= 1 && s < steps[i].offset + half) b = i;
    else if (i + 1 < steps.length && s >= steps[i + 1].offset - half) b = i + 1;
    if (b === null) {
      steps[i].step.layers.forEach(function (id) {
        state.visible.push({ id: id, opacity: 1 });
      });
      return state;
    }
    var prev = steps[b - 1].step;
    var next = steps[b].step;
    var t = ease(cfg.easing, (s - (steps[b].offset - half)) / W);
    var transitions = this.desc.transitions[prev.owner + '->' + next.owner] || {};
    prev.layers.forEach(function (id) {
      if (next.layers.indexOf(id) >= 0) {
        state.visible.push({ id: id, opacity: 1 });
      } else {
        var tr = transitions[id] || { role: 'fadeOut' };
        if (tr.role === 'fadeOut' && 1 - t > 0) state.visible.push({ id: id, opacity: 1 - t });
      }
    });
    next.layers.forEach(function (id) {
      if (prev.layers.indexOf(id) >= 0) return;
      var tr = transitions[id] || { role: 'fadeIn', kind: 'crossfade' };
      if (tr.role === 'blendIn') state.visible.push({ id: id, opacity: 1, transition: tr, t: t });
      else if (t > 0) state.visible.push({ id: id, opacity: t, transition: tr, t: t });
    });
    return state;
  };

  function Player(story) {
    this.story = story;
    this.decisions = {};
    this.visited = {};
    this.elements = {};
    this.stage = document.getElementById('scrolly-stage');
    this.track = document.getElementById('scrolly-track');
    this.prompt = document.getElementById('scrolly-decision');
    this.tree = document.getElementById('scrolly-tree');
    document.title = story.desc.title;
  }

  Player.prototype.layerElement = function (id) {
    if (this.elements[id]) return this.elements[id];
    var layer = this.story.desc.layers[id];
    var el = document.createElement('div');
    el.className = 'scrolly-layer';
    var label = document.createElement('span');
    label.className = 'label';
    label.textContent = layer.kind + ' · ' + id;
    el.appendChild(label);
    var body;
    if (layer.kind === 'text') {
      body = document.createElement('p');
      body.textContent = layer.content;
    } else if (layer.kind === 'decision') {
      body = document.createElement('h2');
      body.textContent = layer.prompt;
    } else if (layer.kind === 'image' && layer.asset) {
      body = document.createElement('img');
      body.src = layer.asset;
      body.alt = layer.src;
      body.onerror = function () { body.replaceWith(errorNode(layer)); };
    } else if ((layer.kind === 'video' || layer.kind === 'audio') && layer.asset) {
      body = document.createElement(layer.kind);
      body.src = layer.asset;
      body.preload = 'metadata';
      body.controls = layer.kind === 'audio';
      body.onerror = function () { body.replaceWith(errorNode(layer)); };
    } else {
      body = document.createElement('pre');
    }
    el.appendChild(body);
    el.dataset.layer = id;
    this.elements[id] = el;
    return el;
  };

  function errorNode(layer) {
    var p = document.createElement('p');
    p.className = 'scrolly-error';
    p.textContent = 'missing media: ' + (layer.src || layer.model || '');
    return p;
  }

  function readout(layer, entry) {
    var params = {};
    Object.keys(layer).forEach(function (k) {
      if (k !== 'asset' && k !== 'kind') params[k] = layer[k];
    });
    if (entry.transition && entry.transition.kind !== 'crossfade') {
      params.transition = entry.transition.kind + ' t=' + entry.t.toFixed(3);
    }
    return JSON.stringify(params, null, 1);
  }

  Player.prototype.clampOf = function (segment) {
    var path = this.story.path(this.decisions);
    var total = 0;
    for (var i = 0; i < path.length; i++) {
      this.story.segments[path[i]].steps.forEach(function (s) { total += s.extentPx; });
      if (path[i] === segment) break;
    }
    return total - this.story.desc.config.transitionWindowPx / 2;
  };

  Player.prototype.unhook = function (scroll) {
    var path = this.story.path(this.decisions);
    for (var i = 0; i < path.length; i++) {
      var id = path[i];
      if (id in this.decisions && scroll < this.clampOf(id)) {
        var keep = {};
        var self = this;
        var before = path.slice(0, i);
        before.forEach(function (p) { if (p in self.decisions) keep[p] = self.decisions[p]; });
        this.decisions = keep;
        return;
      }
    }
  };

  Player.prototype.choose = function (segment, option) {
    var state = this.story.evaluate(window.scrollY, this.decisions);
    if (state.decision !== segment) {
      console.warn('scrolly: ignoring choice for inactive decision', segment);
      return;
    }
    if (!(option >= 0 && option < this.story.children(segment).length)) {
      console.warn('scrolly: option out of range', option);
      return;
    }
    this.decisions[segment] = option;
    this.render();
  };

  Player.prototype.render = function () {
    var self = this;
    this.unhook(window.scrollY);
    var state = this.story.evaluate(window.scrollY, this.decisions);
    this.track.style.height = (state.total + window.innerHeight) + 'px';
    if (state.clamp !== null && window.scrollY > state.clamp) window.scrollTo(0, state.clamp);

    var live = {};
    state.visible.forEach(function (entry, z) {
      var el = self.layerElement(entry.id);
      var layer = self.story.desc.layers[entry.id];
      live[entry.id] = true;
      el.style.opacity = String(entry.opacity);
      el.style.zIndex = String(z);
      var pre = el.querySelector('pre');
      if (pre) pre.textContent = readout(layer, entry);
      if (!el.parentNode) self.stage.appendChild(el);
      var media = el.querySelector('video, audio');
      if (media) {
        if (entry.opacity >= 0.5 && media.paused) media.play().catch(function () {});
        else if (entry.opacity < 0.5 && !media.paused) media.pause();
      }
    });
    Object.keys(this.elements).forEach(function (id) {
      var el = self.elements[id];
      if (!live[id] && el.parentNode) {
        var media = el.querySelector('video, audio');
        if (media && !media.paused) media.pause();
        el.parentNode.removeChild(el);
      }
    });

    this.prompt.innerHTML = '';
    this.prompt.hidden = state.decision === null;
    if (state.decision !== null) {
      this.story.children(state.decision).forEach(function (child, index) {
        var button = document.createElement('button');
        button.textContent = child.label || child.id;
        button.addEventListener('click', function () { self.choose(state.decision, index); });
        self.prompt.appendChild(button);
      });
    }

    var offset = 0;
    state.path.forEach(function (id) {
      if (offset <= state.scroll) self.visited[id] = true;
      self.story.segments[id].steps.forEach(function (s) { offset += s.extentPx; });
    });
    this.current = state.segment;
    this.stepExtent = state.stepExtent;
    this.renderTree();
  };

  Player.prototype.renderTree = function () {
    var self = this;
    function node(id) {
      var li = document.createElement('li');
      if (self.visited[id]) li.classList.add('visited');
      if (self.current === id) li.classList.add('current');
      var glyph = document.createElement('span');
      glyph.className = 'glyph';
      li.appendChild(glyph);
      li.appendChild(document.createTextNode(self.story.segments[id].headKind + ' ' + id));
      var children = self.story.children(id);
      if (children.length) {
        var ul = document.createElement('ul');
        children.forEach(function (c) { ul.appendChild(node(c.id)); });
        li.appendChild(ul);
      }
      return li;
    }
    var root = document.createElement('ul');
    root.appendChild(node(this.story.desc.root));
    this.tree.innerHTML = '';
    this.tree.appendChild(root);
  };

  Player.prototype.keyboard = function (event) {
    var y = window.scrollY;
    var max = document.documentElement.scrollHeight - window.innerHeight;
    var target = null;
    switch (event.key) {
      case 'ArrowDown': target = y + 200; break;
      case 'ArrowUp': target = y - 200; break;
      case 'PageDown': target = y + this.stepExtent; break;
      case 'PageUp': target = y - this.stepExtent; break;
      case 'Home': target = 0; break;
      case 'End': target = max; break;
      default: return;
    }
    event.preventDefault();
    window.scrollTo(0, clamp(target, 0, max));
  };

  function fail(message) {
    var stage = document.getElementById('scrolly-stage');
    var p = document.createElement('p');
    p.className = 'scrolly-error';
    p.textContent = message;
    stage.appendChild(p);
  }

  function start(desc) {
    if (desc.version !== SUPPORTED_VERSION) {
      fail('Unsupported story version ' + desc.version);
      return;
    }
    var player = new Player(new Story(desc));
    window.scrolly = { player: player, adapters: {}, registerAdapter: function (kind, adapter) {
      window.scrolly.adapters[kind] = adapter;
    } };
    window.addEventListener('scroll', function () { player.render(); }, { passive: true });
    window.addEventListener('resize', function () { player.render(); });
    window.addEventListener('keydown', function (e) { player.keyboard(e); });
    player.render();
  }

  fetch(storyUrl)
    .then(function (r) { return r.json(); })
    .then(start)
    .catch(function (e) { fail('Could not load story: ' + e); });
})();
)js";
}

}  // namespace scrolly::resources
