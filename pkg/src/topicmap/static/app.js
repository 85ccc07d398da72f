class Dt extends Error{status;code;constructor(e,n,r){super(r??`${n} (HTTP ${e})`),this.status=e,this.code=n}}async function le(t,e){const n=await t(e);if(!n.ok){let r=`HTTP ${n.status}`;try{const i=await n.json();i&&typeof i.error=="string"&&(r=i.error)}catch{}throw new Dt(n.status,r)}return n.json()}async function Nn(t=fetch){return await le(t,"api/map")}async function kn(t,e,n=fetch){const r=encodeURIComponent(t.join(","));return await le(n,`api/compound?terms=${r}&k=${e}`)}class En{constructor(e=fetch){this.fetchFn=e}fetchFn;ticket=0;async fetch(e,n,r){const i=++this.ticket,o=`api/neighbors/${encodeURIComponent(e)}?k=${n}&depth=${r}`,s=await le(this.fetchFn,o);return i===this.ticket?s:null}}function Ye(t,e){return`${t}\0${e}`}function An(t,e){if(!(e>=0&&e<=1))throw new RangeError("p must be in [0, 1]");if(t.length===0)throw new RangeError("no values");const n=[...t].sort((s,a)=>s-a),r=n.length;let i=0,o=r-1;for(;i<o;){const s=i+o>>1;(s+1)/r>=e?o=s:i=s+1}return n[i]}function Mn(t,e){if(e<1)throw new RangeError("cap must be >= 1");const n=new Map;for(const i of t)for(const o of[i.source,i.target]){let s=n.get(o);s||n.set(o,s=[]),s.push(i.raw)}const r=new Map;for(const[i,o]of n)o.length>=e?(o.sort((s,a)=>a-s),r.set(i,o[e-1])):r.set(i,-1/0);return r}function $n(t,e,n){if(t.length===0)return[];const r=An(t.map(o=>o.raw),e),i=Mn(t,n);return t.filter(o=>o.raw>=Math.max(r,i.get(o.source),i.get(o.target)))}function Sn(t,e){const n=new Set([t]),r=new Set;for(const i of e)(i.source===t||i.target===t)&&(n.add(i.source),n.add(i.target),r.add(Ye(i.source,i.target)));return{nodes:n,links:r}}function Cn(t,e){const n=t.trim().toLowerCase();return n?e.filter(r=>r.toLowerCase().startsWith(n)).sort():[]}function Tn(t,e){t.replaceChildren();const n=new Map;for(const r of e.nodes){if(r.level===0)continue;let i=n.get(r.level);i||n.set(r.level,i=[]),i.push({id:r.id,sim:r.sim})}if(n.size===0){const r=document.createElement("p");r.className="empty",r.textContent="no neighbors at this depth",t.append(r);return}for(const r of[...n.keys()].sort((i,o)=>i-o)){const i=document.createElement("h3");i.textContent=r===1?"nearest":`depth ${r}`,t.append(i);const o=document.createElement("ul");for(const{id:s,sim:a}of n.get(r)){const u=document.createElement("li"),c=document.createElement("span");c.className="term",c.textContent=s;const l=document.createElement("span");l.className="sim",l.textContent=a.toFixed(3),u.append(c,l),o.append(u)}t.append(o)}}function zn(t,e){t.replaceChildren();const n=document.createElement("ul");for(const{term:r,sim:i}of e.neighbors){const o=document.createElement("li"),s=document.createElement("span");s.className="term",s.textContent=r;const a=document.createElement("span");a.className="sim",a.textContent=i.toFixed(3),o.append(s,a),n.append(o)}t.append(n)}function we(t,e){t.replaceChildren();const n=document.createElement("p");n.className="panel-error",n.textContent=e,t.append(n)}var In={value:()=>{}};function Nt(){for(var t=0,e=arguments.length,n={},r;t<e;++t){if(!(r=arguments[t]+"")||r in n||/[\s.]/.test(r))throw new Error("illegal type: "+r);n[r]=[]}return new Lt(n)}function Lt(t){this._=t}function Ln(t,e){return t.trim().split(/^|\s+/).map(function(n){var r="",i=n.indexOf(".");if(i>=0&&(r=n.slice(i+1),n=n.slice(0,i)),n&&!e.hasOwnProperty(n))throw new Error("unknown type: "+n);return{type:n,name:r}})}Lt.prototype=Nt.prototype={constructor:Lt,on:function(t,e){var n=this._,r=Ln(t+"",n),i,o=-1,s=r.length;if(arguments.length<2){for(;++o<s;)if((i=(t=r[o]).type)&&(i=Pn(n[i],t.name)))return i;return}if(e!=null&&typeof e!="function")throw new Error("invalid callback: "+e);for(;++o<s;)if(i=(t=r[o]).type)n[i]=be(n[i],t.name,e);else if(e==null)for(i in n)n[i]=be(n[i],t.name,null);return this},copy:function(){var t={},e=this._;for(var n in e)t[n]=e[n].slice();return new Lt(t)},call:function(t,e){if((i=arguments.length-2)>0)for(var n=new Array(i),r=0,i,o;r<i;++r)n[r]=arguments[r+2];if(!this._.hasOwnProperty(t))throw new Error("unknown type: "+t);for(o=this._[t],r=0,i=o.length;r<i;++r)o[r].value.apply(e,n)},apply:function(t,e,n){if(!this._.hasOwnProperty(t))throw new Error("unknown type: "+t);for(var r=this._[t],i=0,o=r.length;i<o;++i)r[i].value.apply(e,n)}};function Pn(t,e){for(var n=0,r=t.length,i;n<r;++n)if((i=t[n]).name===e)return i.value}function be(t,e,n){for(var r=0,i=t.length;r<i;++r)if(t[r].name===e){t[r]=In,t=t.slice(0,r).concat(t.slice(r+1));break}return n!=null&&t.push({name:e,value:n}),t}var ne="http://www.w3.org/1999/xhtml";const Ne={svg:"http://www.w3.org/2000/svg",xhtml:ne,xlink:"http://www.w3.org/1999/xlink",xml:"http://www.w3.org/XML/1998/namespace",xmlns:"http://www.w3.org/2000/xmlns/"};function Vt(t){var e=t+="",n=e.indexOf(":");return n>=0&&(e=t.slice(0,n))!=="xmlns"&&(t=t.slice(n+1)),Ne.hasOwnProperty(e)?{space:Ne[e],local:t}:t}function Rn(t){return function(){var e=this.ownerDocument,n=this.namespaceURI;return n===ne&&e.documentElement.namespaceURI===ne?e.createElement(t):e.createElementNS(n,t)}}function Bn(t){return function(){return this.ownerDocument.createElementNS(t.space,t.local)}}function Ue(t){var e=Vt(t);return(e.local?Bn:Rn)(e)}function Dn(){}function fe(t){return t==null?Dn:function(){return this.querySelector(t)}}function Fn(t){typeof t!="function"&&(t=fe(t));for(var e=this._groups,n=e.length,r=new Array(n),i=0;i<n;++i)for(var o=e[i],s=o.length,a=r[i]=new Array(s),u,c,l=0;l<s;++l)(u=o[l])&&(c=t.call(u,u.__data__,l,o))&&("__data__"in u&&(c.__data__=u.__data__),a[l]=c);return new G(r,this._parents)}function On(t){return t==null?[]:Array.isArray(t)?t:Array.from(t)}function qn(){return[]}function Ke(t){return t==null?qn:function(){return this.querySelectorAll(t)}}function Xn(t){return function(){return On(t.apply(this,arguments))}}function Hn(t){typeof t=="function"?t=Xn(t):t=Ke(t);for(var e=this._groups,n=e.length,r=[],i=[],o=0;o<n;++o)for(var s=e[o],a=s.length,u,c=0;c<a;++c)(u=s[c])&&(r.push(t.call(u,u.__data__,c,s)),i.push(u));return new G(r,i)}function We(t){return function(){return this.matches(t)}}function Ze(t){return function(e){return e.matches(t)}}var Gn=Array.prototype.find;function Vn(t){return function(){return Gn.call(this.children,t)}}function Yn(){return this.firstElementChild}function Un(t){return this.select(t==null?Yn:Vn(typeof t=="function"?t:Ze(t)))}var Kn=Array.prototype.filter;function Wn(){return Array.from(this.children)}function Zn(t){return function(){return Kn.call(this.children,t)}}function Qn(t){return this.selectAll(t==null?Wn:Zn(typeof t=="function"?t:Ze(t)))}function Jn(t){typeof t!="function"&&(t=We(t));for(var e=this._groups,n=e.length,r=new Array(n),i=0;i<n;++i)for(var o=e[i],s=o.length,a=r[i]=[],u,c=0;c<s;++c)(u=o[c])&&t.call(u,u.__data__,c,o)&&a.push(u);return new G(r,this._parents)}function Qe(t){return new Array(t.length)}function jn(){return new G(this._enter||this._groups.map(Qe),this._parents)}function Ft(t,e){this.ownerDocument=t.ownerDocument,this.namespaceURI=t.namespaceURI,this._next=null,this._parent=t,this.__data__=e}Ft.prototype={constructor:Ft,appendChild:function(t){return this._parent.insertBefore(t,this._next)},insertBefore:function(t,e){return this._parent.insertBefore(t,e)},querySelector:function(t){return this._parent.querySelector(t)},querySelectorAll:function(t){return this._parent.querySelectorAll(t)}};function tr(t){return function(){return t}}function er(t,e,n,r,i,o){for(var s=0,a,u=e.length,c=o.length;s<c;++s)(a=e[s])?(a.__data__=o[s],r[s]=a):n[s]=new Ft(t,o[s]);for(;s<u;++s)(a=e[s])&&(i[s]=a)}function nr(t,e,n,r,i,o,s){var a,u,c=new Map,l=e.length,m=o.length,h=new Array(l),f;for(a=0;a<l;++a)(u=e[a])&&(h[a]=f=s.call(u,u.__data__,a,e)+"",c.has(f)?i[a]=u:c.set(f,u));for(a=0;a<m;++a)f=s.call(t,o[a],a,o)+"",(u=c.get(f))?(r[a]=u,u.__data__=o[a],c.delete(f)):n[a]=new Ft(t,o[a]);for(a=0;a<l;++a)(u=e[a])&&c.get(h[a])===u&&(i[a]=u)}function rr(t){return t.__data__}function ir(t,e){if(!arguments.length)return Array.from(this,rr);var n=e?nr:er,r=this._parents,i=this._groups;typeof t!="function"&&(t=tr(t));for(var o=i.length,s=new Array(o),a=new Array(o),u=new Array(o),c=0;c<o;++c){var l=r[c],m=i[c],h=m.length,f=or(t.call(l,l&&l.__data__,c,r)),_=f.length,v=a[c]=new Array(_),y=s[c]=new Array(_),p=u[c]=new Array(h);n(l,m,v,y,p,f,e);for(var w=0,E=0,d,k;w<_;++w)if(d=v[w]){for(w>=E&&(E=w+1);!(k=y[E])&&++E<_;);d._next=k||null}}return s=new G(s,r),s._enter=a,s._exit=u,s}function or(t){return typeof t=="object"&&"length"in t?t:Array.from(t)}function sr(){return new G(this._exit||this._groups.map(Qe),this._parents)}function ar(t,e,n){var r=this.enter(),i=this,o=this.exit();return typeof t=="function"?(r=t(r),r&&(r=r.selection())):r=r.append(t+""),e!=null&&(i=e(i),i&&(i=i.selection())),n==null?o.remove():n(o),r&&i?r.merge(i).order():i}function ur(t){for(var e=t.selection?t.selection():t,n=this._groups,r=e._groups,i=n.length,o=r.length,s=Math.min(i,o),a=new Array(i),u=0;u<s;++u)for(var c=n[u],l=r[u],m=c.length,h=a[u]=new Array(m),f,_=0;_<m;++_)(f=c[_]||l[_])&&(h[_]=f);for(;u<i;++u)a[u]=n[u];return new G(a,this._parents)}function cr(){for(var t=this._groups,e=-1,n=t.length;++e<n;)for(var r=t[e],i=r.length-1,o=r[i],s;--i>=0;)(s=r[i])&&(o&&s.compareDocumentPosition(o)^4&&o.parentNode.insertBefore(s,o),o=s);return this}function lr(t){t||(t=fr);function e(m,h){return m&&h?t(m.__data__,h.__data__):!m-!h}for(var n=this._groups,r=n.length,i=new Array(r),o=0;o<r;++o){for(var s=n[o],a=s.length,u=i[o]=new Array(a),c,l=0;l<a;++l)(c=s[l])&&(u[l]=c);u.sort(e)}return new G(i,this._parents).order()}function fr(t,e){return t<e?-1:t>e?1:t>=e?0:NaN}function hr(){var t=arguments[0];return arguments[0]=this,t.apply(null,arguments),this}function gr(){return Array.from(this)}function dr(){for(var t=this._groups,e=0,n=t.length;e<n;++e)for(var r=t[e],i=0,o=r.length;i<o;++i){var s=r[i];if(s)return s}return null}function pr(){let t=0;for(const e of this)++t;return t}function mr(){return!this.node()}function yr(t){for(var e=this._groups,n=0,r=e.length;n<r;++n)for(var i=e[n],o=0,s=i.length,a;o<s;++o)(a=i[o])&&t.call(a,a.__data__,o,i);return this}function vr(t){return function(){this.removeAttribute(t)}}function xr(t){return function(){this.removeAttributeNS(t.space,t.local)}}function _r(t,e){return function(){this.setAttribute(t,e)}}function wr(t,e){return function(){this.setAttributeNS(t.space,t.local,e)}}function br(t,e){return function(){var n=e.apply(this,arguments);n==null?this.removeAttribute(t):this.setAttribute(t,n)}}function Nr(t,e){return function(){var n=e.apply(this,arguments);n==null?this.removeAttributeNS(t.space,t.local):this.setAttributeNS(t.space,t.local,n)}}function kr(t,e){var n=Vt(t);if(arguments.length<2){var r=this.node();return n.local?r.getAttributeNS(n.space,n.local):r.getAttribute(n)}return this.each((e==null?n.local?xr:vr:typeof e=="function"?n.local?Nr:br:n.local?wr:_r)(n,e))}function Je(t){return t.ownerDocument&&t.ownerDocument.defaultView||t.document&&t||t.defaultView}function Er(t){return function(){this.style.removeProperty(t)}}function Ar(t,e,n){return function(){this.style.setProperty(t,e,n)}}function Mr(t,e,n){return function(){var r=e.apply(this,arguments);r==null?this.style.removeProperty(t):this.style.setProperty(t,r,n)}}function $r(t,e,n){return arguments.length>1?this.each((e==null?Er:typeof e=="function"?Mr:Ar)(t,e,n??"")):ht(this.node(),t)}function ht(t,e){return t.style.getPropertyValue(e)||Je(t).getComputedStyle(t,null).getPropertyValue(e)}function Sr(t){return function(){delete this[t]}}function Cr(t,e){return function(){this[t]=e}}function Tr(t,e){return function(){var n=e.apply(this,arguments);n==null?delete this[t]:this[t]=n}}function zr(t,e){return arguments.length>1?this.each((e==null?Sr:typeof e=="function"?Tr:Cr)(t,e)):this.node()[t]}function je(t){return t.trim().split(/^|\s+/)}function he(t){return t.classList||new tn(t)}function tn(t){this._node=t,this._names=je(t.getAttribute("class")||"")}tn.prototype={add:function(t){var e=this._names.indexOf(t);e<0&&(this._names.push(t),this._node.setAttribute("class",this._names.join(" ")))},remove:function(t){var e=this._names.indexOf(t);e>=0&&(this._names.splice(e,1),this._node.setAttribute("class",this._names.join(" ")))},contains:function(t){return this._names.indexOf(t)>=0}};function en(t,e){for(var n=he(t),r=-1,i=e.length;++r<i;)n.add(e[r])}function nn(t,e){for(var n=he(t),r=-1,i=e.length;++r<i;)n.remove(e[r])}function Ir(t){return function(){en(this,t)}}function Lr(t){return function(){nn(this,t)}}function Pr(t,e){return function(){(e.apply(this,arguments)?en:nn)(this,t)}}function Rr(t,e){var n=je(t+"");if(arguments.length<2){for(var r=he(this.node()),i=-1,o=n.length;++i<o;)if(!r.contains(n[i]))return!1;return!0}return this.each((typeof e=="function"?Pr:e?Ir:Lr)(n,e))}function Br(){this.textContent=""}function Dr(t){return function(){this.textContent=t}}function Fr(t){return function(){var e=t.apply(this,arguments);this.textContent=e??""}}function Or(t){return arguments.length?this.each(t==null?Br:(typeof t=="function"?Fr:Dr)(t)):this.node().textContent}function qr(){this.innerHTML=""}function Xr(t){return function(){this.innerHTML=t}}function Hr(t){return function(){var e=t.apply(this,arguments);this.innerHTML=e??""}}function Gr(t){return arguments.length?this.each(t==null?qr:(typeof t=="function"?Hr:Xr)(t)):this.node().innerHTML}function Vr(){this.nextSibling&&this.parentNode.appendChild(this)}function Yr(){return this.each(Vr)}function Ur(){this.previousSibling&&this.parentNode.insertBefore(this,this.parentNode.firstChild)}function Kr(){return this.each(Ur)}function Wr(t){var e=typeof t=="function"?t:Ue(t);return this.select(function(){return this.appendChild(e.apply(this,arguments))})}function Zr(){return null}function Qr(t,e){var n=typeof t=="function"?t:Ue(t),r=e==null?Zr:typeof e=="function"?e:fe(e);return this.select(function(){return this.insertBefore(n.apply(this,arguments),r.apply(this,arguments)||null)})}function Jr(){var t=this.parentNode;t&&t.removeChild(this)}function jr(){return this.each(Jr)}function ti(){var t=this.cloneNode(!1),e=this.parentNode;return e?e.insertBefore(t,this.nextSibling):t}function ei(){var t=this.cloneNode(!0),e=this.parentNode;return e?e.insertBefore(t,this.nextSibling):t}function ni(t){return this.select(t?ei:ti)}function ri(t){return arguments.length?this.property("__data__",t):this.node().__data__}function ii(t){return function(e){t.call(this,e,this.__data__)}}function oi(t){return t.trim().split(/^|\s+/).map(function(e){var n="",r=e.indexOf(".");return r>=0&&(n=e.slice(r+1),e=e.slice(0,r)),{type:e,name:n}})}function si(t){return function(){var e=this.__on;if(e){for(var n=0,r=-1,i=e.length,o;n<i;++n)o=e[n],(!t.type||o.type===t.type)&&o.name===t.name?this.removeEventListener(o.type,o.listener,o.options):e[++r]=o;++r?e.length=r:delete this.__on}}}function ai(t,e,n){return function(){var r=this.__on,i,o=ii(e);if(r){for(var s=0,a=r.length;s<a;++s)if((i=r[s]).type===t.type&&i.name===t.name){this.removeEventListener(i.type,i.listener,i.options),this.addEventListener(i.type,i.listener=o,i.options=n),i.value=e;return}}this.addEventListener(t.type,o,n),i={type:t.type,name:t.name,value:e,listener:o,options:n},r?r.push(i):this.__on=[i]}}function ui(t,e,n){var r=oi(t+""),i,o=r.length,s;if(arguments.length<2){var a=this.node().__on;if(a){for(var u=0,c=a.length,l;u<c;++u)for(i=0,l=a[u];i<o;++i)if((s=r[i]).type===l.type&&s.name===l.name)return l.value}return}for(a=e?ai:si,i=0;i<o;++i)this.each(a(r[i],e,n));return this}function rn(t,e,n){var r=Je(t),i=r.CustomEvent;typeof i=="function"?i=new i(e,n):(i=r.document.createEvent("Event"),n?(i.initEvent(e,n.bubbles,n.cancelable),i.detail=n.detail):i.initEvent(e,!1,!1)),t.dispatchEvent(i)}function ci(t,e){return function(){return rn(this,t,e)}}function li(t,e){return function(){return rn(this,t,e.apply(this,arguments))}}function fi(t,e){return this.each((typeof e=="function"?li:ci)(t,e))}function*hi(){for(var t=this._groups,e=0,n=t.length;e<n;++e)for(var r=t[e],i=0,o=r.length,s;i<o;++i)(s=r[i])&&(yield s)}var on=[null];function G(t,e){this._groups=t,this._parents=e}function kt(){return new G([[document.documentElement]],on)}function gi(){return this}G.prototype=kt.prototype={constructor:G,select:Fn,selectAll:Hn,selectChild:Un,selectChildren:Qn,filter:Jn,data:ir,enter:jn,exit:sr,join:ar,merge:ur,selection:gi,order:cr,sort:lr,call:hr,nodes:gr,node:dr,size:pr,empty:mr,each:yr,attr:kr,style:$r,property:zr,classed:Rr,text:Or,html:Gr,raise:Yr,lower:Kr,append:Wr,insert:Qr,remove:jr,clone:ni,datum:ri,on:ui,dispatch:fi,[Symbol.iterator]:hi};function Z(t){return typeof t=="string"?new G([[document.querySelector(t)]],[document.documentElement]):new G([[t]],on)}function di(t){let e;for(;e=t.sourceEvent;)t=e;return t}function nt(t,e){if(t=di(t),e===void 0&&(e=t.currentTarget),e){var n=e.ownerSVGElement||e;if(n.createSVGPoint){var r=n.createSVGPoint();return r.x=t.clientX,r.y=t.clientY,r=r.matrixTransform(e.getScreenCTM().inverse()),[r.x,r.y]}if(e.getBoundingClientRect){var i=e.getBoundingClientRect();return[t.clientX-i.left-e.clientLeft,t.clientY-i.top-e.clientTop]}}return[t.pageX,t.pageY]}const pi={passive:!1},vt={capture:!0,passive:!1};function Wt(t){t.stopImmediatePropagation()}function lt(t){t.preventDefault(),t.stopImmediatePropagation()}function sn(t){var e=t.document.documentElement,n=Z(t).on("dragstart.drag",lt,vt);"onselectstart"in e?n.on("selectstart.drag",lt,vt):(e.__noselect=e.style.MozUserSelect,e.style.MozUserSelect="none")}function an(t,e){var n=t.document.documentElement,r=Z(t).on("dragstart.drag",null);e&&(r.on("click.drag",lt,vt),setTimeout(function(){r.on("click.drag",null)},0)),"onselectstart"in n?r.on("selectstart.drag",null):(n.style.MozUserSelect=n.__noselect,delete n.__noselect)}const At=t=>()=>t;function re(t,{sourceEvent:e,subject:n,target:r,identifier:i,active:o,x:s,y:a,dx:u,dy:c,dispatch:l}){Object.defineProperties(this,{type:{value:t,enumerable:!0,configurable:!0},sourceEvent:{value:e,enumerable:!0,configurable:!0},subject:{value:n,enumerable:!0,configurable:!0},target:{value:r,enumerable:!0,configurable:!0},identifier:{value:i,enumerable:!0,configurable:!0},active:{value:o,enumerable:!0,configurable:!0},x:{value:s,enumerable:!0,configurable:!0},y:{value:a,enumerable:!0,configurable:!0},dx:{value:u,enumerable:!0,configurable:!0},dy:{value:c,enumerable:!0,configurable:!0},_:{value:l}})}re.prototype.on=function(){var t=this._.on.apply(this._,arguments);return t===this._?this:t};function mi(t){return!t.ctrlKey&&!t.button}function yi(){return this.parentNode}function vi(t,e){return e??{x:t.x,y:t.y}}function xi(){return navigator.maxTouchPoints||"ontouchstart"in this}function _i(){var t=mi,e=yi,n=vi,r=xi,i={},o=Nt("start","drag","end"),s=0,a,u,c,l,m=0;function h(d){d.on("mousedown.drag",f).filter(r).on("touchstart.drag",y).on("touchmove.drag",p,pi).on("touchend.drag touchcancel.drag",w).style("touch-action","none").style("-webkit-tap-highlight-color","rgba(0,0,0,0)")}function f(d,k){if(!(l||!t.call(this,d,k))){var b=E(this,e.call(this,d,k),d,k,"mouse");b&&(Z(d.view).on("mousemove.drag",_,vt).on("mouseup.drag",v,vt),sn(d.view),Wt(d),c=!1,a=d.clientX,u=d.clientY,b("start",d))}}function _(d){if(lt(d),!c){var k=d.clientX-a,b=d.clientY-u;c=k*k+b*b>m}i.mouse("drag",d)}function v(d){Z(d.view).on("mousemove.drag mouseup.drag",null),an(d.view,c),lt(d),i.mouse("end",d)}function y(d,k){if(t.call(this,d,k)){var b=d.changedTouches,M=e.call(this,d,k),$=b.length,I,z;for(I=0;I<$;++I)(z=E(this,M,d,k,b[I].identifier,b[I]))&&(Wt(d),z("start",d,b[I]))}}function p(d){var k=d.changedTouches,b=k.length,M,$;for(M=0;M<b;++M)($=i[k[M].identifier])&&(lt(d),$("drag",d,k[M]))}function w(d){var k=d.changedTouches,b=k.length,M,$;for(l&&clearTimeout(l),l=setTimeout(function(){l=null},500),M=0;M<b;++M)($=i[k[M].identifier])&&(Wt(d),$("end",d,k[M]))}function E(d,k,b,M,$,I){var z=o.copy(),P=nt(I||b,k),H,q,g;if((g=n.call(d,new re("beforestart",{sourceEvent:b,target:h,identifier:$,active:s,x:P[0],y:P[1],dx:0,dy:0,dispatch:z}),M))!=null)return H=g.x-P[0]||0,q=g.y-P[1]||0,function N(x,A,S){var C=P,T;switch(x){case"start":i[$]=N,T=s++;break;case"end":delete i[$],--s;case"drag":P=nt(S||A,k),T=s;break}z.call(x,d,new re(x,{sourceEvent:A,subject:g,target:h,identifier:$,active:T,x:P[0]+H,y:P[1]+q,dx:P[0]-C[0],dy:P[1]-C[1],dispatch:z}),M)}}return h.filter=function(d){return arguments.length?(t=typeof d=="function"?d:At(!!d),h):t},h.container=function(d){return arguments.length?(e=typeof d=="function"?d:At(d),h):e},h.subject=function(d){return arguments.length?(n=typeof d=="function"?d:At(d),h):n},h.touchable=function(d){return arguments.length?(r=typeof d=="function"?d:At(!!d),h):r},h.on=function(){var d=o.on.apply(o,arguments);return d===o?h:d},h.clickDistance=function(d){return arguments.length?(m=(d=+d)*d,h):Math.sqrt(m)},h}function ge(t,e,n){t.prototype=e.prototype=n,n.constructor=t}function un(t,e){var n=Object.create(t.prototype);for(var r in e)n[r]=e[r];return n}function Et(){}var xt=.7,Ot=1/xt,ft="\\s*([+-]?\\d+)\\s*",_t="\\s*([+-]?(?:\\d*\\.)?\\d+(?:[eE][+-]?\\d+)?)\\s*",Q="\\s*([+-]?(?:\\d*\\.)?\\d+(?:[eE][+-]?\\d+)?)%\\s*",wi=/^#([0-9a-f]{3,8})$/,bi=new RegExp(`^rgb\\(${ft},${ft},${ft}\\)$`),Ni=new RegExp(`^rgb\\(${Q},${Q},${Q}\\)$`),ki=new RegExp(`^rgba\\(${ft},${ft},${ft},${_t}\\)$`),Ei=new RegExp(`^rgba\\(${Q},${Q},${Q},${_t}\\)$`),Ai=new RegExp(`^hsl\\(${_t},${Q},${Q}\\)$`),Mi=new RegExp(`^hsla\\(${_t},${Q},${Q},${_t}\\)$`),ke={aliceblue:15792383,antiquewhite:16444375,aqua:65535,aquamarine:8388564,azure:15794175,beige:16119260,bisque:16770244,black:0,blanchedalmond:16772045,blue:255,blueviolet:9055202,brown:10824234,burlywood:14596231,cadetblue:6266528,chartreuse:8388352,chocolate:13789470,coral:16744272,cornflowerblue:6591981,cornsilk:16775388,crimson:14423100,cyan:65535,darkblue:139,darkcyan:35723,darkgoldenrod:12092939,darkgray:11119017,darkgreen:25600,darkgrey:11119017,darkkhaki:12433259,darkmagenta:9109643,darkolivegreen:5597999,darkorange:16747520,darkorchid:10040012,darkred:9109504,darksalmon:15308410,darkseagreen:9419919,darkslateblue:4734347,darkslategray:3100495,darkslategrey:3100495,darkturquoise:52945,darkviolet:9699539,deeppink:16716947,deepskyblue:49151,dimgray:6908265,dimgrey:6908265,dodgerblue:2003199,firebrick:11674146,floralwhite:16775920,forestgreen:2263842,fuchsia:16711935,gainsboro:14474460,ghostwhite:16316671,gold:16766720,goldenrod:14329120,gray:8421504,green:32768,greenyellow:11403055,grey:8421504,honeydew:15794160,hotpink:16738740,indianred:13458524,indigo:4915330,ivory:16777200,khaki:15787660,lavender:15132410,lavenderblush:16773365,lawngreen:8190976,lemonchiffon:16775885,lightblue:11393254,lightcoral:15761536,lightcyan:14745599,lightgoldenrodyellow:16448210,lightgray:13882323,lightgreen:9498256,lightgrey:13882323,lightpink:16758465,lightsalmon:16752762,lightseagreen:2142890,lightskyblue:8900346,lightslategray:7833753,lightslategrey:7833753,lightsteelblue:11584734,lightyellow:16777184,lime:65280,limegreen:3329330,linen:16445670,magenta:16711935,maroon:8388608,mediumaquamarine:6737322,mediumblue:205,mediumorchid:12211667,mediumpurple:9662683,mediumseagreen:3978097,mediumslateblue:8087790,mediumspringgreen:64154,mediumturquoise:4772300,mediumvioletred:13047173,midnightblue:1644912,mintcream:16121850,mistyrose:16770273,moccasin:16770229,navajowhite:16768685,navy:128,oldlace:16643558,olive:8421376,olivedrab:7048739,orange:16753920,orangered:16729344,orchid:14315734,palegoldenrod:15657130,palegreen:10025880,paleturquoise:11529966,palevioletred:14381203,papayawhip:16773077,peachpuff:16767673,peru:13468991,pink:16761035,plum:14524637,powderblue:11591910,purple:8388736,rebeccapurple:6697881,red:16711680,rosybrown:12357519,royalblue:4286945,saddlebrown:9127187,salmon:16416882,sandybrown:16032864,seagreen:3050327,seashell:16774638,sienna:10506797,silver:12632256,skyblue:8900331,slateblue:6970061,slategray:7372944,slategrey:7372944,snow:16775930,springgreen:65407,steelblue:4620980,tan:13808780,teal:32896,thistle:14204888,tomato:16737095,turquoise:4251856,violet:15631086,wheat:16113331,white:16777215,whitesmoke:16119285,yellow:16776960,yellowgreen:10145074};ge(Et,wt,{copy(t){return Object.assign(new this.constructor,this,t)},displayable(){return this.rgb().displayable()},hex:Ee,formatHex:Ee,formatHex8:$i,formatHsl:Si,formatRgb:Ae,toString:Ae});function Ee(){return this.rgb().formatHex()}function $i(){return this.rgb().formatHex8()}function Si(){return cn(this).formatHsl()}function Ae(){return this.rgb().formatRgb()}function wt(t){var e,n;return t=(t+"").trim().toLowerCase(),(e=wi.exec(t))?(n=e[1].length,e=parseInt(e[1],16),n===6?Me(e):n===3?new X(e>>8&15|e>>4&240,e>>4&15|e&240,(e&15)<<4|e&15,1):n===8?Mt(e>>24&255,e>>16&255,e>>8&255,(e&255)/255):n===4?Mt(e>>12&15|e>>8&240,e>>8&15|e>>4&240,e>>4&15|e&240,((e&15)<<4|e&15)/255):null):(e=bi.exec(t))?new X(e[1],e[2],e[3],1):(e=Ni.exec(t))?new X(e[1]*255/100,e[2]*255/100,e[3]*255/100,1):(e=ki.exec(t))?Mt(e[1],e[2],e[3],e[4]):(e=Ei.exec(t))?Mt(e[1]*255/100,e[2]*255/100,e[3]*255/100,e[4]):(e=Ai.exec(t))?Ce(e[1],e[2]/100,e[3]/100,1):(e=Mi.exec(t))?Ce(e[1],e[2]/100,e[3]/100,e[4]):ke.hasOwnProperty(t)?Me(ke[t]):t==="transparent"?new X(NaN,NaN,NaN,0):null}function Me(t){return new X(t>>16&255,t>>8&255,t&255,1)}function Mt(t,e,n,r){return r<=0&&(t=e=n=NaN),new X(t,e,n,r)}function Ci(t){return t instanceof Et||(t=wt(t)),t?(t=t.rgb(),new X(t.r,t.g,t.b,t.opacity)):new X}function ie(t,e,n,r){return arguments.length===1?Ci(t):new X(t,e,n,r??1)}function X(t,e,n,r){this.r=+t,this.g=+e,this.b=+n,this.opacity=+r}ge(X,ie,un(Et,{brighter(t){return t=t==null?Ot:Math.pow(Ot,t),new X(this.r*t,this.g*t,this.b*t,this.opacity)},darker(t){return t=t==null?xt:Math.pow(xt,t),new X(this.r*t,this.g*t,this.b*t,this.opacity)},rgb(){return this},clamp(){return new X(ut(this.r),ut(this.g),ut(this.b),qt(this.opacity))},displayable(){return-.5<=this.r&&this.r<255.5&&-.5<=this.g&&this.g<255.5&&-.5<=this.b&&this.b<255.5&&0<=this.opacity&&this.opacity<=1},hex:$e,formatHex:$e,formatHex8:Ti,formatRgb:Se,toString:Se}));function $e(){return`#${at(this.r)}${at(this.g)}${at(this.b)}`}function Ti(){return`#${at(this.r)}${at(this.g)}${at(this.b)}${at((isNaN(this.opacity)?1:this.opacity)*255)}`}function Se(){const t=qt(this.opacity);return`${t===1?"rgb(":"rgba("}${ut(this.r)}, ${ut(this.g)}, ${ut(this.b)}${t===1?")":`, ${t})`}`}function qt(t){return isNaN(t)?1:Math.max(0,Math.min(1,t))}function ut(t){return Math.max(0,Math.min(255,Math.round(t)||0))}function at(t){return t=ut(t),(t<16?"0":"")+t.toString(16)}function Ce(t,e,n,r){return r<=0?t=e=n=NaN:n<=0||n>=1?t=e=NaN:e<=0&&(t=NaN),new U(t,e,n,r)}function cn(t){if(t instanceof U)return new U(t.h,t.s,t.l,t.opacity);if(t instanceof Et||(t=wt(t)),!t)return new U;if(t instanceof U)return t;t=t.rgb();var e=t.r/255,n=t.g/255,r=t.b/255,i=Math.min(e,n,r),o=Math.max(e,n,r),s=NaN,a=o-i,u=(o+i)/2;return a?(e===o?s=(n-r)/a+(n<r)*6:n===o?s=(r-e)/a+2:s=(e-n)/a+4,a/=u<.5?o+i:2-o-i,s*=60):a=u>0&&u<1?0:s,new U(s,a,u,t.opacity)}function zi(t,e,n,r){return arguments.length===1?cn(t):new U(t,e,n,r??1)}function U(t,e,n,r){this.h=+t,this.s=+e,this.l=+n,this.opacity=+r}ge(U,zi,un(Et,{brighter(t){return t=t==null?Ot:Math.pow(Ot,t),new U(this.h,this.s,this.l*t,this.opacity)},darker(t){return t=t==null?xt:Math.pow(xt,t),new U(this.h,this.s,this.l*t,this.opacity)},rgb(){var t=this.h%360+(this.h<0)*360,e=isNaN(t)||isNaN(this.s)?0:this.s,n=this.l,r=n+(n<.5?n:1-n)*e,i=2*n-r;return new X(Zt(t>=240?t-240:t+120,i,r),Zt(t,i,r),Zt(t<120?t+240:t-120,i,r),this.opacity)},clamp(){return new U(Te(this.h),$t(this.s),$t(this.l),qt(this.opacity))},displayable(){return(0<=this.s&&this.s<=1||isNaN(this.s))&&0<=this.l&&this.l<=1&&0<=this.opacity&&this.opacity<=1},formatHsl(){const t=qt(this.opacity);return`${t===1?"hsl(":"hsla("}${Te(this.h)}, ${$t(this.s)*100}%, ${$t(this.l)*100}%${t===1?")":`, ${t})`}`}}));function Te(t){return t=(t||0)%360,t<0?t+360:t}function $t(t){return Math.max(0,Math.min(1,t||0))}function Zt(t,e,n){return(t<60?e+(n-e)*t/60:t<180?n:t<240?e+(n-e)*(240-t)/60:e)*255}const ln=t=>()=>t;function Ii(t,e){return function(n){return t+n*e}}function Li(t,e,n){return t=Math.pow(t,n),e=Math.pow(e,n)-t,n=1/n,function(r){return Math.pow(t+r*e,n)}}function Pi(t){return(t=+t)==1?fn:function(e,n){return n-e?Li(e,n,t):ln(isNaN(e)?n:e)}}function fn(t,e){var n=e-t;return n?Ii(t,n):ln(isNaN(t)?e:t)}const ze=(function t(e){var n=Pi(e);function r(i,o){var s=n((i=ie(i)).r,(o=ie(o)).r),a=n(i.g,o.g),u=n(i.b,o.b),c=fn(i.opacity,o.opacity);return function(l){return i.r=s(l),i.g=a(l),i.b=u(l),i.opacity=c(l),i+""}}return r.gamma=t,r})(1);function ot(t,e){return t=+t,e=+e,function(n){return t*(1-n)+e*n}}var oe=/[-+]?(?:\d+\.?\d*|\.?\d+)(?:[eE][-+]?\d+)?/g,Qt=new RegExp(oe.source,"g");function Ri(t){return function(){return t}}function Bi(t){return function(e){return t(e)+""}}function Di(t,e){var n=oe.lastIndex=Qt.lastIndex=0,r,i,o,s=-1,a=[],u=[];for(t=t+"",e=e+"";(r=oe.exec(t))&&(i=Qt.exec(e));)(o=i.index)>n&&(o=e.slice(n,o),a[s]?a[s]+=o:a[++s]=o),(r=r[0])===(i=i[0])?a[s]?a[s]+=i:a[++s]=i:(a[++s]=null,u.push({i:s,x:ot(r,i)})),n=Qt.lastIndex;return n<e.length&&(o=e.slice(n),a[s]?a[s]+=o:a[++s]=o),a.length<2?u[0]?Bi(u[0].x):Ri(e):(e=u.length,function(c){for(var l=0,m;l<e;++l)a[(m=u[l]).i]=m.x(c);return a.join("")})}var Ie=180/Math.PI,se={translateX:0,translateY:0,rotate:0,skewX:0,scaleX:1,scaleY:1};function hn(t,e,n,r,i,o){var s,a,u;return(s=Math.sqrt(t*t+e*e))&&(t/=s,e/=s),(u=t*n+e*r)&&(n-=t*u,r-=e*u),(a=Math.sqrt(n*n+r*r))&&(n/=a,r/=a,u/=a),t*r<e*n&&(t=-t,e=-e,u=-u,s=-s),{translateX:i,translateY:o,rotate:Math.atan2(e,t)*Ie,skewX:Math.atan(u)*Ie,scaleX:s,scaleY:a}}var St;function Fi(t){const e=new(typeof DOMMatrix=="function"?DOMMatrix:WebKitCSSMatrix)(t+"");return e.isIdentity?se:hn(e.a,e.b,e.c,e.d,e.e,e.f)}function Oi(t){return t==null||(St||(St=document.createElementNS("http://www.w3.org/2000/svg","g")),St.setAttribute("transform",t),!(t=St.transform.baseVal.consolidate()))?se:(t=t.matrix,hn(t.a,t.b,t.c,t.d,t.e,t.f))}function gn(t,e,n,r){function i(c){return c.length?c.pop()+" ":""}function o(c,l,m,h,f,_){if(c!==m||l!==h){var v=f.push("translate(",null,e,null,n);_.push({i:v-4,x:ot(c,m)},{i:v-2,x:ot(l,h)})}else(m||h)&&f.push("translate("+m+e+h+n)}function s(c,l,m,h){c!==l?(c-l>180?l+=360:l-c>180&&(c+=360),h.push({i:m.push(i(m)+"rotate(",null,r)-2,x:ot(c,l)})):l&&m.push(i(m)+"rotate("+l+r)}function a(c,l,m,h){c!==l?h.push({i:m.push(i(m)+"skewX(",null,r)-2,x:ot(c,l)}):l&&m.push(i(m)+"skewX("+l+r)}function u(c,l,m,h,f,_){if(c!==m||l!==h){var v=f.push(i(f)+"scale(",null,",",null,")");_.push({i:v-4,x:ot(c,m)},{i:v-2,x:ot(l,h)})}else(m!==1||h!==1)&&f.push(i(f)+"scale("+m+","+h+")")}return function(c,l){var m=[],h=[];return c=t(c),l=t(l),o(c.translateX,c.translateY,l.translateX,l.translateY,m,h),s(c.rotate,l.rotate,m,h),a(c.skewX,l.skewX,m,h),u(c.scaleX,c.scaleY,l.scaleX,l.scaleY,m,h),c=l=null,function(f){for(var _=-1,v=h.length,y;++_<v;)m[(y=h[_]).i]=y.x(f);return m.join("")}}}var qi=gn(Fi,"px, ","px)","deg)"),Xi=gn(Oi,", ",")",")"),Hi=1e-12;function Le(t){return((t=Math.exp(t))+1/t)/2}function Gi(t){return((t=Math.exp(t))-1/t)/2}function Vi(t){return((t=Math.exp(2*t))-1)/(t+1)}const Yi=(function t(e,n,r){function i(o,s){var a=o[0],u=o[1],c=o[2],l=s[0],m=s[1],h=s[2],f=l-a,_=m-u,v=f*f+_*_,y,p;if(v<Hi)p=Math.log(h/c)/e,y=function(M){return[a+M*f,u+M*_,c*Math.exp(e*M*p)]};else{var w=Math.sqrt(v),E=(h*h-c*c+r*v)/(2*c*n*w),d=(h*h-c*c-r*v)/(2*h*n*w),k=Math.log(Math.sqrt(E*E+1)-E),b=Math.log(Math.sqrt(d*d+1)-d);p=(b-k)/e,y=function(M){var $=M*p,I=Le(k),z=c/(n*w)*(I*Vi(e*$+k)-Gi(k));return[a+z*f,u+z*_,c*I/Le(e*$+k)]}}return y.duration=p*1e3*e/Math.SQRT2,y}return i.rho=function(o){var s=Math.max(.001,+o),a=s*s,u=a*a;return t(s,a,u)},i})(Math.SQRT2,2,4);var gt=0,mt=0,dt=0,dn=1e3,Xt,yt,Ht=0,ct=0,Yt=0,bt=typeof performance=="object"&&performance.now?performance:Date,pn=typeof window=="object"&&window.requestAnimationFrame?window.requestAnimationFrame.bind(window):function(t){setTimeout(t,17)};function de(){return ct||(pn(Ui),ct=bt.now()+Yt)}function Ui(){ct=0}function Gt(){this._call=this._time=this._next=null}Gt.prototype=pe.prototype={constructor:Gt,restart:function(t,e,n){if(typeof t!="function")throw new TypeError("callback is not a function");n=(n==null?de():+n)+(e==null?0:+e),!this._next&&yt!==this&&(yt?yt._next=this:Xt=this,yt=this),this._call=t,this._time=n,ae()},stop:function(){this._call&&(this._call=null,this._time=1/0,ae())}};function pe(t,e,n){var r=new Gt;return r.restart(t,e,n),r}function Ki(){de(),++gt;for(var t=Xt,e;t;)(e=ct-t._time)>=0&&t._call.call(void 0,e),t=t._next;--gt}function Pe(){ct=(Ht=bt.now())+Yt,gt=mt=0;try{Ki()}finally{gt=0,Zi(),ct=0}}function Wi(){var t=bt.now(),e=t-Ht;e>dn&&(Yt-=e,Ht=t)}function Zi(){for(var t,e=Xt,n,r=1/0;e;)e._call?(r>e._time&&(r=e._time),t=e,e=e._next):(n=e._next,e._next=null,e=t?t._next=n:Xt=n);yt=t,ae(r)}function ae(t){if(!gt){mt&&(mt=clearTimeout(mt));var e=t-ct;e>24?(t<1/0&&(mt=setTimeout(Pe,t-bt.now()-Yt)),dt&&(dt=clearInterval(dt))):(dt||(Ht=bt.now(),dt=setInterval(Wi,dn)),gt=1,pn(Pe))}}function Re(t,e,n){var r=new Gt;return e=e==null?0:+e,r.restart(i=>{r.stop(),t(i+e)},e,n),r}var Qi=Nt("start","end","cancel","interrupt"),Ji=[],mn=0,Be=1,ue=2,Pt=3,De=4,ce=5,Rt=6;function Ut(t,e,n,r,i,o){var s=t.__transition;if(!s)t.__transition={};else if(n in s)return;ji(t,n,{name:e,index:r,group:i,on:Qi,tween:Ji,time:o.time,delay:o.delay,duration:o.duration,ease:o.ease,timer:null,state:mn})}function me(t,e){var n=K(t,e);if(n.state>mn)throw new Error("too late; already scheduled");return n}function J(t,e){var n=K(t,e);if(n.state>Pt)throw new Error("too late; already running");return n}function K(t,e){var n=t.__transition;if(!n||!(n=n[e]))throw new Error("transition not found");return n}function ji(t,e,n){var r=t.__transition,i;r[e]=n,n.timer=pe(o,0,n.time);function o(c){n.state=Be,n.timer.restart(s,n.delay,n.time),n.delay<=c&&s(c-n.delay)}function s(c){var l,m,h,f;if(n.state!==Be)return u();for(l in r)if(f=r[l],f.name===n.name){if(f.state===Pt)return Re(s);f.state===De?(f.state=Rt,f.timer.stop(),f.on.call("interrupt",t,t.__data__,f.index,f.group),delete r[l]):+l<e&&(f.state=Rt,f.timer.stop(),f.on.call("cancel",t,t.__data__,f.index,f.group),delete r[l])}if(Re(function(){n.state===Pt&&(n.state=De,n.timer.restart(a,n.delay,n.time),a(c))}),n.state=ue,n.on.call("start",t,t.__data__,n.index,n.group),n.state===ue){for(n.state=Pt,i=new Array(h=n.tween.length),l=0,m=-1;l<h;++l)(f=n.tween[l].value.call(t,t.__data__,n.index,n.group))&&(i[++m]=f);i.length=m+1}}function a(c){for(var l=c<n.duration?n.ease.call(null,c/n.duration):(n.timer.restart(u),n.state=ce,1),m=-1,h=i.length;++m<h;)i[m].call(t,l);n.state===ce&&(n.on.call("end",t,t.__data__,n.index,n.group),u())}function u(){n.state=Rt,n.timer.stop(),delete r[e];for(var c in r)return;delete t.__transition}}function Bt(t,e){var n=t.__transition,r,i,o=!0,s;if(n){e=e==null?null:e+"";for(s in n){if((r=n[s]).name!==e){o=!1;continue}i=r.state>ue&&r.state<ce,r.state=Rt,r.timer.stop(),r.on.call(i?"interrupt":"cancel",t,t.__data__,r.index,r.group),delete n[s]}o&&delete t.__transition}}function to(t){return this.each(function(){Bt(this,t)})}function eo(t,e){var n,r;return function(){var i=J(this,t),o=i.tween;if(o!==n){r=n=o;for(var s=0,a=r.length;s<a;++s)if(r[s].name===e){r=r.slice(),r.splice(s,1);break}}i.tween=r}}function no(t,e,n){var r,i;if(typeof n!="function")throw new Error;return function(){var o=J(this,t),s=o.tween;if(s!==r){i=(r=s).slice();for(var a={name:e,value:n},u=0,c=i.length;u<c;++u)if(i[u].name===e){i[u]=a;break}u===c&&i.push(a)}o.tween=i}}function ro(t,e){var n=this._id;if(t+="",arguments.length<2){for(var r=K(this.node(),n).tween,i=0,o=r.length,s;i<o;++i)if((s=r[i]).name===t)return s.value;return null}return this.each((e==null?eo:no)(n,t,e))}function ye(t,e,n){var r=t._id;return t.each(function(){var i=J(this,r);(i.value||(i.value={}))[e]=n.apply(this,arguments)}),function(i){return K(i,r).value[e]}}function yn(t,e){var n;return(typeof e=="number"?ot:e instanceof wt?ze:(n=wt(e))?(e=n,ze):Di)(t,e)}function io(t){return function(){this.removeAttribute(t)}}function oo(t){return function(){this.removeAttributeNS(t.space,t.local)}}function so(t,e,n){var r,i=n+"",o;return function(){var s=this.getAttribute(t);return s===i?null:s===r?o:o=e(r=s,n)}}function ao(t,e,n){var r,i=n+"",o;return function(){var s=this.getAttributeNS(t.space,t.local);return s===i?null:s===r?o:o=e(r=s,n)}}function uo(t,e,n){var r,i,o;return function(){var s,a=n(this),u;return a==null?void this.removeAttribute(t):(s=this.getAttribute(t),u=a+"",s===u?null:s===r&&u===i?o:(i=u,o=e(r=s,a)))}}function co(t,e,n){var r,i,o;return function(){var s,a=n(this),u;return a==null?void this.removeAttributeNS(t.space,t.local):(s=this.getAttributeNS(t.space,t.local),u=a+"",s===u?null:s===r&&u===i?o:(i=u,o=e(r=s,a)))}}function lo(t,e){var n=Vt(t),r=n==="transform"?Xi:yn;return this.attrTween(t,typeof e=="function"?(n.local?co:uo)(n,r,ye(this,"attr."+t,e)):e==null?(n.local?oo:io)(n):(n.local?ao:so)(n,r,e))}function fo(t,e){return function(n){this.setAttribute(t,e.call(this,n))}}function ho(t,e){return function(n){this.setAttributeNS(t.space,t.local,e.call(this,n))}}function go(t,e){var n,r;function i(){var o=e.apply(this,arguments);return o!==r&&(n=(r=o)&&ho(t,o)),n}return i._value=e,i}function po(t,e){var n,r;function i(){var o=e.apply(this,arguments);return o!==r&&(n=(r=o)&&fo(t,o)),n}return i._value=e,i}function mo(t,e){var n="attr."+t;if(arguments.length<2)return(n=this.tween(n))&&n._value;if(e==null)return this.tween(n,null);if(typeof e!="function")throw new Error;var r=Vt(t);return this.tween(n,(r.local?go:po)(r,e))}function yo(t,e){return function(){me(this,t).delay=+e.apply(this,arguments)}}function vo(t,e){return e=+e,function(){me(this,t).delay=e}}function xo(t){var e=this._id;return arguments.length?this.each((typeof t=="function"?yo:vo)(e,t)):K(this.node(),e).delay}function _o(t,e){return function(){J(this,t).duration=+e.apply(this,arguments)}}function wo(t,e){return e=+e,function(){J(this,t).duration=e}}function bo(t){var e=this._id;return arguments.length?this.each((typeof t=="function"?_o:wo)(e,t)):K(this.node(),e).duration}function No(t,e){if(typeof e!="function")throw new Error;return function(){J(this,t).ease=e}}function ko(t){var e=this._id;return arguments.length?this.each(No(e,t)):K(this.node(),e).ease}function Eo(t,e){return function(){var n=e.apply(this,arguments);if(typeof n!="function")throw new Error;J(this,t).ease=n}}function Ao(t){if(typeof t!="function")throw new Error;return this.each(Eo(this._id,t))}function Mo(t){typeof t!="function"&&(t=We(t));for(var e=this._groups,n=e.length,r=new Array(n),i=0;i<n;++i)for(var o=e[i],s=o.length,a=r[i]=[],u,c=0;c<s;++c)(u=o[c])&&t.call(u,u.__data__,c,o)&&a.push(u);return new it(r,this._parents,this._name,this._id)}function $o(t){if(t._id!==this._id)throw new Error;for(var e=this._groups,n=t._groups,r=e.length,i=n.length,o=Math.min(r,i),s=new Array(r),a=0;a<o;++a)for(var u=e[a],c=n[a],l=u.length,m=s[a]=new Array(l),h,f=0;f<l;++f)(h=u[f]||c[f])&&(m[f]=h);for(;a<r;++a)s[a]=e[a];return new it(s,this._parents,this._name,this._id)}function So(t){return(t+"").trim().split(/^|\s+/).every(function(e){var n=e.indexOf(".");return n>=0&&(e=e.slice(0,n)),!e||e==="start"})}function Co(t,e,n){var r,i,o=So(e)?me:J;return function(){var s=o(this,t),a=s.on;a!==r&&(i=(r=a).copy()).on(e,n),s.on=i}}function To(t,e){var n=this._id;return arguments.length<2?K(this.node(),n).on.on(t):this.each(Co(n,t,e))}function zo(t){return function(){var e=this.parentNode;for(var n in this.__transition)if(+n!==t)return;e&&e.removeChild(this)}}function Io(){return this.on("end.remove",zo(this._id))}function Lo(t){var e=this._name,n=this._id;typeof t!="function"&&(t=fe(t));for(var r=this._groups,i=r.length,o=new Array(i),s=0;s<i;++s)for(var a=r[s],u=a.length,c=o[s]=new Array(u),l,m,h=0;h<u;++h)(l=a[h])&&(m=t.call(l,l.__data__,h,a))&&("__data__"in l&&(m.__data__=l.__data__),c[h]=m,Ut(c[h],e,n,h,c,K(l,n)));return new it(o,this._parents,e,n)}function Po(t){var e=this._name,n=this._id;typeof t!="function"&&(t=Ke(t));for(var r=this._groups,i=r.length,o=[],s=[],a=0;a<i;++a)for(var u=r[a],c=u.length,l,m=0;m<c;++m)if(l=u[m]){for(var h=t.call(l,l.__data__,m,u),f,_=K(l,n),v=0,y=h.length;v<y;++v)(f=h[v])&&Ut(f,e,n,v,h,_);o.push(h),s.push(l)}return new it(o,s,e,n)}var Ro=kt.prototype.constructor;function Bo(){return new Ro(this._groups,this._parents)}function Do(t,e){var n,r,i;return function(){var o=ht(this,t),s=(this.style.removeProperty(t),ht(this,t));return o===s?null:o===n&&s===r?i:i=e(n=o,r=s)}}function vn(t){return function(){this.style.removeProperty(t)}}function Fo(t,e,n){var r,i=n+"",o;return function(){var s=ht(this,t);return s===i?null:s===r?o:o=e(r=s,n)}}function Oo(t,e,n){var r,i,o;return function(){var s=ht(this,t),a=n(this),u=a+"";return a==null&&(u=a=(this.style.removeProperty(t),ht(this,t))),s===u?null:s===r&&u===i?o:(i=u,o=e(r=s,a))}}function qo(t,e){var n,r,i,o="style."+e,s="end."+o,a;return function(){var u=J(this,t),c=u.on,l=u.value[o]==null?a||(a=vn(e)):void 0;(c!==n||i!==l)&&(r=(n=c).copy()).on(s,i=l),u.on=r}}function Xo(t,e,n){var r=(t+="")=="transform"?qi:yn;return e==null?this.styleTween(t,Do(t,r)).on("end.style."+t,vn(t)):typeof e=="function"?this.styleTween(t,Oo(t,r,ye(this,"style."+t,e))).each(qo(this._id,t)):this.styleTween(t,Fo(t,r,e),n).on("end.style."+t,null)}function Ho(t,e,n){return function(r){this.style.setProperty(t,e.call(this,r),n)}}function Go(t,e,n){var r,i;function o(){var s=e.apply(this,arguments);return s!==i&&(r=(i=s)&&Ho(t,s,n)),r}return o._value=e,o}function Vo(t,e,n){var r="style."+(t+="");if(arguments.length<2)return(r=this.tween(r))&&r._value;if(e==null)return this.tween(r,null);if(typeof e!="function")throw new Error;return this.tween(r,Go(t,e,n??""))}function Yo(t){return function(){this.textContent=t}}function Uo(t){return function(){var e=t(this);this.textContent=e??""}}function Ko(t){return this.tween("text",typeof t=="function"?Uo(ye(this,"text",t)):Yo(t==null?"":t+""))}function Wo(t){return function(e){this.textContent=t.call(this,e)}}function Zo(t){var e,n;function r(){var i=t.apply(this,arguments);return i!==n&&(e=(n=i)&&Wo(i)),e}return r._value=t,r}function Qo(t){var e="text";if(arguments.length<1)return(e=this.tween(e))&&e._value;if(t==null)return this.tween(e,null);if(typeof t!="function")throw new Error;return this.tween(e,Zo(t))}function Jo(){for(var t=this._name,e=this._id,n=xn(),r=this._groups,i=r.length,o=0;o<i;++o)for(var s=r[o],a=s.length,u,c=0;c<a;++c)if(u=s[c]){var l=K(u,e);Ut(u,t,n,c,s,{time:l.time+l.delay+l.duration,delay:0,duration:l.duration,ease:l.ease})}return new it(r,this._parents,t,n)}function jo(){var t,e,n=this,r=n._id,i=n.size();return new Promise(function(o,s){var a={value:s},u={value:function(){--i===0&&o()}};n.each(function(){var c=J(this,r),l=c.on;l!==t&&(e=(t=l).copy(),e._.cancel.push(a),e._.interrupt.push(a),e._.end.push(u)),c.on=e}),i===0&&o()})}var ts=0;function it(t,e,n,r){this._groups=t,this._parents=e,this._name=n,this._id=r}function xn(){return++ts}var et=kt.prototype;it.prototype={constructor:it,select:Lo,selectAll:Po,selectChild:et.selectChild,selectChildren:et.selectChildren,filter:Mo,merge:$o,selection:Bo,transition:Jo,call:et.call,nodes:et.nodes,node:et.node,size:et.size,empty:et.empty,each:et.each,on:To,attr:lo,attrTween:mo,style:Xo,styleTween:Vo,text:Ko,textTween:Qo,remove:Io,tween:ro,delay:xo,duration:bo,ease:ko,easeVarying:Ao,end:jo,[Symbol.iterator]:et[Symbol.iterator]};function es(t){return((t*=2)<=1?t*t*t:(t-=2)*t*t+2)/2}var ns={time:null,delay:0,duration:250,ease:es};function rs(t,e){for(var n;!(n=t.__transition)||!(n=n[e]);)if(!(t=t.parentNode))throw new Error(`transition ${e} not found`);return n}function is(t){var e,n;t instanceof it?(e=t._id,t=t._name):(e=xn(),(n=ns).time=de(),t=t==null?null:t+"");for(var r=this._groups,i=r.length,o=0;o<i;++o)for(var s=r[o],a=s.length,u,c=0;c<a;++c)(u=s[c])&&Ut(u,t,e,c,s,n||rs(u,e));return new it(r,this._parents,t,e)}kt.prototype.interrupt=to;kt.prototype.transition=is;function os(t){const e=+this._x.call(null,t),n=+this._y.call(null,t);return _n(this.cover(e,n),e,n,t)}function _n(t,e,n,r){if(isNaN(e)||isNaN(n))return t;var i,o=t._root,s={data:r},a=t._x0,u=t._y0,c=t._x1,l=t._y1,m,h,f,_,v,y,p,w;if(!o)return t._root=s,t;for(;o.length;)if((v=e>=(m=(a+c)/2))?a=m:c=m,(y=n>=(h=(u+l)/2))?u=h:l=h,i=o,!(o=o[p=y<<1|v]))return i[p]=s,t;if(f=+t._x.call(null,o.data),_=+t._y.call(null,o.data),e===f&&n===_)return s.next=o,i?i[p]=s:t._root=s,t;do i=i?i[p]=new Array(4):t._root=new Array(4),(v=e>=(m=(a+c)/2))?a=m:c=m,(y=n>=(h=(u+l)/2))?u=h:l=h;while((p=y<<1|v)===(w=(_>=h)<<1|f>=m));return i[w]=o,i[p]=s,t}function ss(t){var e,n,r=t.length,i,o,s=new Array(r),a=new Array(r),u=1/0,c=1/0,l=-1/0,m=-1/0;for(n=0;n<r;++n)isNaN(i=+this._x.call(null,e=t[n]))||isNaN(o=+this._y.call(null,e))||(s[n]=i,a[n]=o,i<u&&(u=i),i>l&&(l=i),o<c&&(c=o),o>m&&(m=o));if(u>l||c>m)return this;for(this.cover(u,c).cover(l,m),n=0;n<r;++n)_n(this,s[n],a[n],t[n]);return this}function as(t,e){if(isNaN(t=+t)||isNaN(e=+e))return this;var n=this._x0,r=this._y0,i=this._x1,o=this._y1;if(isNaN(n))i=(n=Math.floor(t))+1,o=(r=Math.floor(e))+1;else{for(var s=i-n||1,a=this._root,u,c;n>t||t>=i||r>e||e>=o;)switch(c=(e<r)<<1|t<n,u=new Array(4),u[c]=a,a=u,s*=2,c){case 0:i=n+s,o=r+s;break;case 1:n=i-s,o=r+s;break;case 2:i=n+s,r=o-s;break;case 3:n=i-s,r=o-s;break}this._root&&this._root.length&&(this._root=a)}return this._x0=n,this._y0=r,this._x1=i,this._y1=o,this}function us(){var t=[];return this.visit(function(e){if(!e.length)do t.push(e.data);while(e=e.next)}),t}function cs(t){return arguments.length?this.cover(+t[0][0],+t[0][1]).cover(+t[1][0],+t[1][1]):isNaN(this._x0)?void 0:[[this._x0,this._y0],[this._x1,this._y1]]}function D(t,e,n,r,i){this.node=t,this.x0=e,this.y0=n,this.x1=r,this.y1=i}function ls(t,e,n){var r,i=this._x0,o=this._y0,s,a,u,c,l=this._x1,m=this._y1,h=[],f=this._root,_,v;for(f&&h.push(new D(f,i,o,l,m)),n==null?n=1/0:(i=t-n,o=e-n,l=t+n,m=e+n,n*=n);_=h.pop();)if(!(!(f=_.node)||(s=_.x0)>l||(a=_.y0)>m||(u=_.x1)<i||(c=_.y1)<o))if(f.length){var y=(s+u)/2,p=(a+c)/2;h.push(new D(f[3],y,p,u,c),new D(f[2],s,p,y,c),new D(f[1],y,a,u,p),new D(f[0],s,a,y,p)),(v=(e>=p)<<1|t>=y)&&(_=h[h.length-1],h[h.length-1]=h[h.length-1-v],h[h.length-1-v]=_)}else{var w=t-+this._x.call(null,f.data),E=e-+this._y.call(null,f.data),d=w*w+E*E;if(d<n){var k=Math.sqrt(n=d);i=t-k,o=e-k,l=t+k,m=e+k,r=f.data}}return r}function fs(t){if(isNaN(l=+this._x.call(null,t))||isNaN(m=+this._y.call(null,t)))return this;var e,n=this._root,r,i,o,s=this._x0,a=this._y0,u=this._x1,c=this._y1,l,m,h,f,_,v,y,p;if(!n)return this;if(n.length)for(;;){if((_=l>=(h=(s+u)/2))?s=h:u=h,(v=m>=(f=(a+c)/2))?a=f:c=f,e=n,!(n=n[y=v<<1|_]))return this;if(!n.length)break;(e[y+1&3]||e[y+2&3]||e[y+3&3])&&(r=e,p=y)}for(;n.data!==t;)if(i=n,!(n=n.next))return this;return(o=n.next)&&delete n.next,i?(o?i.next=o:delete i.next,this):e?(o?e[y]=o:delete e[y],(n=e[0]||e[1]||e[2]||e[3])&&n===(e[3]||e[2]||e[1]||e[0])&&!n.length&&(r?r[p]=n:this._root=n),this):(this._root=o,this)}function hs(t){for(var e=0,n=t.length;e<n;++e)this.remove(t[e]);return this}function gs(){return this._root}function ds(){var t=0;return this.visit(function(e){if(!e.length)do++t;while(e=e.next)}),t}function ps(t){var e=[],n,r=this._root,i,o,s,a,u;for(r&&e.push(new D(r,this._x0,this._y0,this._x1,this._y1));n=e.pop();)if(!t(r=n.node,o=n.x0,s=n.y0,a=n.x1,u=n.y1)&&r.length){var c=(o+a)/2,l=(s+u)/2;(i=r[3])&&e.push(new D(i,c,l,a,u)),(i=r[2])&&e.push(new D(i,o,l,c,u)),(i=r[1])&&e.push(new D(i,c,s,a,l)),(i=r[0])&&e.push(new D(i,o,s,c,l))}return this}function ms(t){var e=[],n=[],r;for(this._root&&e.push(new D(this._root,this._x0,this._y0,this._x1,this._y1));r=e.pop();){var i=r.node;if(i.length){var o,s=r.x0,a=r.y0,u=r.x1,c=r.y1,l=(s+u)/2,m=(a+c)/2;(o=i[0])&&e.push(new D(o,s,a,l,m)),(o=i[1])&&e.push(new D(o,l,a,u,m)),(o=i[2])&&e.push(new D(o,s,m,l,c)),(o=i[3])&&e.push(new D(o,l,m,u,c))}n.push(r)}for(;r=n.pop();)t(r.node,r.x0,r.y0,r.x1,r.y1);return this}function ys(t){return t[0]}function vs(t){return arguments.length?(this._x=t,this):this._x}function xs(t){return t[1]}function _s(t){return arguments.length?(this._y=t,this):this._y}function ve(t,e,n){var r=new xe(e??ys,n??xs,NaN,NaN,NaN,NaN);return t==null?r:r.addAll(t)}function xe(t,e,n,r,i,o){this._x=t,this._y=e,this._x0=n,this._y0=r,this._x1=i,this._y1=o,this._root=void 0}function Fe(t){for(var e={data:t.data},n=e;t=t.next;)n=n.next={data:t.data};return e}var O=ve.prototype=xe.prototype;O.copy=function(){var t=new xe(this._x,this._y,this._x0,this._y0,this._x1,this._y1),e=this._root,n,r;if(!e)return t;if(!e.length)return t._root=Fe(e),t;for(n=[{source:e,target:t._root=new Array(4)}];e=n.pop();)for(var i=0;i<4;++i)(r=e.source[i])&&(r.length?n.push({source:r,target:e.target[i]=new Array(4)}):e.target[i]=Fe(r));return t};O.add=os;O.addAll=ss;O.cover=as;O.data=us;O.extent=cs;O.find=ls;O.remove=fs;O.removeAll=hs;O.root=gs;O.size=ds;O.visit=ps;O.visitAfter=ms;O.x=vs;O.y=_s;function F(t){return function(){return t}}function st(t){return(t()-.5)*1e-6}function ws(t){return t.x+t.vx}function bs(t){return t.y+t.vy}function Ns(t){var e,n,r,i=1,o=1;typeof t!="function"&&(t=F(t==null?1:+t));function s(){for(var c,l=e.length,m,h,f,_,v,y,p=0;p<o;++p)for(m=ve(e,ws,bs).visitAfter(a),c=0;c<l;++c)h=e[c],v=n[h.index],y=v*v,f=h.x+h.vx,_=h.y+h.vy,m.visit(w);function w(E,d,k,b,M){var $=E.data,I=E.r,z=v+I;if($){if($.index>h.index){var P=f-$.x-$.vx,H=_-$.y-$.vy,q=P*P+H*H;q<z*z&&(P===0&&(P=st(r),q+=P*P),H===0&&(H=st(r),q+=H*H),q=(z-(q=Math.sqrt(q)))/q*i,h.vx+=(P*=q)*(z=(I*=I)/(y+I)),h.vy+=(H*=q)*z,$.vx-=P*(z=1-z),$.vy-=H*z)}return}return d>f+z||b<f-z||k>_+z||M<_-z}}function a(c){if(c.data)return c.r=n[c.data.index];for(var l=c.r=0;l<4;++l)c[l]&&c[l].r>c.r&&(c.r=c[l].r)}function u(){if(e){var c,l=e.length,m;for(n=new Array(l),c=0;c<l;++c)m=e[c],n[m.index]=+t(m,c,e)}}return s.initialize=function(c,l){e=c,r=l,u()},s.iterations=function(c){return arguments.length?(o=+c,s):o},s.strength=function(c){return arguments.length?(i=+c,s):i},s.radius=function(c){return arguments.length?(t=typeof c=="function"?c:F(+c),u(),s):t},s}function ks(t){return t.index}function Oe(t,e){var n=t.get(e);if(!n)throw new Error("node not found: "+e);return n}function Es(t){var e=ks,n=m,r,i=F(30),o,s,a,u,c,l=1;t==null&&(t=[]);function m(y){return 1/Math.min(a[y.source.index],a[y.target.index])}function h(y){for(var p=0,w=t.length;p<l;++p)for(var E=0,d,k,b,M,$,I,z;E<w;++E)d=t[E],k=d.source,b=d.target,M=b.x+b.vx-k.x-k.vx||st(c),$=b.y+b.vy-k.y-k.vy||st(c),I=Math.sqrt(M*M+$*$),I=(I-o[E])/I*y*r[E],M*=I,$*=I,b.vx-=M*(z=u[E]),b.vy-=$*z,k.vx+=M*(z=1-z),k.vy+=$*z}function f(){if(s){var y,p=s.length,w=t.length,E=new Map(s.map((k,b)=>[e(k,b,s),k])),d;for(y=0,a=new Array(p);y<w;++y)d=t[y],d.index=y,typeof d.source!="object"&&(d.source=Oe(E,d.source)),typeof d.target!="object"&&(d.target=Oe(E,d.target)),a[d.source.index]=(a[d.source.index]||0)+1,a[d.target.index]=(a[d.target.index]||0)+1;for(y=0,u=new Array(w);y<w;++y)d=t[y],u[y]=a[d.source.index]/(a[d.source.index]+a[d.target.index]);r=new Array(w),_(),o=new Array(w),v()}}function _(){if(s)for(var y=0,p=t.length;y<p;++y)r[y]=+n(t[y],y,t)}function v(){if(s)for(var y=0,p=t.length;y<p;++y)o[y]=+i(t[y],y,t)}return h.initialize=function(y,p){s=y,c=p,f()},h.links=function(y){return arguments.length?(t=y,f(),h):t},h.id=function(y){return arguments.length?(e=y,h):e},h.iterations=function(y){return arguments.length?(l=+y,h):l},h.strength=function(y){return arguments.length?(n=typeof y=="function"?y:F(+y),_(),h):n},h.distance=function(y){return arguments.length?(i=typeof y=="function"?y:F(+y),v(),h):i},h}const As=1664525,Ms=1013904223,qe=4294967296;function $s(){let t=1;return()=>(t=(As*t+Ms)%qe)/qe}function Ss(t){return t.x}function Cs(t){return t.y}var Ts=10,zs=Math.PI*(3-Math.sqrt(5));function Is(t){var e,n=1,r=.001,i=1-Math.pow(r,1/300),o=0,s=.6,a=new Map,u=pe(m),c=Nt("tick","end"),l=$s();t==null&&(t=[]);function m(){h(),c.call("tick",e),n<r&&(u.stop(),c.call("end",e))}function h(v){var y,p=t.length,w;v===void 0&&(v=1);for(var E=0;E<v;++E)for(n+=(o-n)*i,a.forEach(function(d){d(n)}),y=0;y<p;++y)w=t[y],w.fx==null?w.x+=w.vx*=s:(w.x=w.fx,w.vx=0),w.fy==null?w.y+=w.vy*=s:(w.y=w.fy,w.vy=0);return e}function f(){for(var v=0,y=t.length,p;v<y;++v){if(p=t[v],p.index=v,p.fx!=null&&(p.x=p.fx),p.fy!=null&&(p.y=p.fy),isNaN(p.x)||isNaN(p.y)){var w=Ts*Math.sqrt(.5+v),E=v*zs;p.x=w*Math.cos(E),p.y=w*Math.sin(E)}(isNaN(p.vx)||isNaN(p.vy))&&(p.vx=p.vy=0)}}function _(v){return v.initialize&&v.initialize(t,l),v}return f(),e={tick:h,restart:function(){return u.restart(m),e},stop:function(){return u.stop(),e},nodes:function(v){return arguments.length?(t=v,f(),a.forEach(_),e):t},alpha:function(v){return arguments.length?(n=+v,e):n},alphaMin:function(v){return arguments.length?(r=+v,e):r},alphaDecay:function(v){return arguments.length?(i=+v,e):+i},alphaTarget:function(v){return arguments.length?(o=+v,e):o},velocityDecay:function(v){return arguments.length?(s=1-v,e):1-s},randomSource:function(v){return arguments.length?(l=v,a.forEach(_),e):l},force:function(v,y){return arguments.length>1?(y==null?a.delete(v):a.set(v,_(y)),e):a.get(v)},find:function(v,y,p){var w=0,E=t.length,d,k,b,M,$;for(p==null?p=1/0:p*=p,w=0;w<E;++w)M=t[w],d=v-M.x,k=y-M.y,b=d*d+k*k,b<p&&($=M,p=b);return $},on:function(v,y){return arguments.length>1?(c.on(v,y),e):c.on(v)}}}function Ls(){var t,e,n,r,i=F(-30),o,s=1,a=1/0,u=.81;function c(f){var _,v=t.length,y=ve(t,Ss,Cs).visitAfter(m);for(r=f,_=0;_<v;++_)e=t[_],y.visit(h)}function l(){if(t){var f,_=t.length,v;for(o=new Array(_),f=0;f<_;++f)v=t[f],o[v.index]=+i(v,f,t)}}function m(f){var _=0,v,y,p=0,w,E,d;if(f.length){for(w=E=d=0;d<4;++d)(v=f[d])&&(y=Math.abs(v.value))&&(_+=v.value,p+=y,w+=y*v.x,E+=y*v.y);f.x=w/p,f.y=E/p}else{v=f,v.x=v.data.x,v.y=v.data.y;do _+=o[v.data.index];while(v=v.next)}f.value=_}function h(f,_,v,y){if(!f.value)return!0;var p=f.x-e.x,w=f.y-e.y,E=y-_,d=p*p+w*w;if(E*E/u<d)return d<a&&(p===0&&(p=st(n),d+=p*p),w===0&&(w=st(n),d+=w*w),d<s&&(d=Math.sqrt(s*d)),e.vx+=p*f.value*r/d,e.vy+=w*f.value*r/d),!0;if(f.length||d>=a)return;(f.data!==e||f.next)&&(p===0&&(p=st(n),d+=p*p),w===0&&(w=st(n),d+=w*w),d<s&&(d=Math.sqrt(s*d)));do f.data!==e&&(E=o[f.data.index]*r/d,e.vx+=p*E,e.vy+=w*E);while(f=f.next)}return c.initialize=function(f,_){t=f,n=_,l()},c.strength=function(f){return arguments.length?(i=typeof f=="function"?f:F(+f),l(),c):i},c.distanceMin=function(f){return arguments.length?(s=f*f,c):Math.sqrt(s)},c.distanceMax=function(f){return arguments.length?(a=f*f,c):Math.sqrt(a)},c.theta=function(f){return arguments.length?(u=f*f,c):Math.sqrt(u)},c}function Ps(t){var e=F(.1),n,r,i;typeof t!="function"&&(t=F(t==null?0:+t));function o(a){for(var u=0,c=n.length,l;u<c;++u)l=n[u],l.vx+=(i[u]-l.x)*r[u]*a}function s(){if(n){var a,u=n.length;for(r=new Array(u),i=new Array(u),a=0;a<u;++a)r[a]=isNaN(i[a]=+t(n[a],a,n))?0:+e(n[a],a,n)}}return o.initialize=function(a){n=a,s()},o.strength=function(a){return arguments.length?(e=typeof a=="function"?a:F(+a),s(),o):e},o.x=function(a){return arguments.length?(t=typeof a=="function"?a:F(+a),s(),o):t},o}function Rs(t){var e=F(.1),n,r,i;typeof t!="function"&&(t=F(t==null?0:+t));function o(a){for(var u=0,c=n.length,l;u<c;++u)l=n[u],l.vy+=(i[u]-l.y)*r[u]*a}function s(){if(n){var a,u=n.length;for(r=new Array(u),i=new Array(u),a=0;a<u;++a)r[a]=isNaN(i[a]=+t(n[a],a,n))?0:+e(n[a],a,n)}}return o.initialize=function(a){n=a,s()},o.strength=function(a){return arguments.length?(e=typeof a=="function"?a:F(+a),s(),o):e},o.y=function(a){return arguments.length?(t=typeof a=="function"?a:F(+a),s(),o):t},o}const Ct=t=>()=>t;function Bs(t,{sourceEvent:e,target:n,transform:r,dispatch:i}){Object.defineProperties(this,{type:{value:t,enumerable:!0,configurable:!0},sourceEvent:{value:e,enumerable:!0,configurable:!0},target:{value:n,enumerable:!0,configurable:!0},transform:{value:r,enumerable:!0,configurable:!0},_:{value:i}})}function rt(t,e,n){this.k=t,this.x=e,this.y=n}rt.prototype={constructor:rt,scale:function(t){return t===1?this:new rt(this.k*t,this.x,this.y)},translate:function(t,e){return t===0&e===0?this:new rt(this.k,this.x+this.k*t,this.y+this.k*e)},apply:function(t){return[t[0]*this.k+this.x,t[1]*this.k+this.y]},applyX:function(t){return t*this.k+this.x},applyY:function(t){return t*this.k+this.y},invert:function(t){return[(t[0]-this.x)/this.k,(t[1]-this.y)/this.k]},invertX:function(t){return(t-this.x)/this.k},invertY:function(t){return(t-this.y)/this.k},rescaleX:function(t){return t.copy().domain(t.range().map(this.invertX,this).map(t.invert,t))},rescaleY:function(t){return t.copy().domain(t.range().map(this.invertY,this).map(t.invert,t))},toString:function(){return"translate("+this.x+","+this.y+") scale("+this.k+")"}};var _e=new rt(1,0,0);rt.prototype;function Jt(t){t.stopImmediatePropagation()}function pt(t){t.preventDefault(),t.stopImmediatePropagation()}function Ds(t){return(!t.ctrlKey||t.type==="wheel")&&!t.button}function Fs(){var t=this;return t instanceof SVGElement?(t=t.ownerSVGElement||t,t.hasAttribute("viewBox")?(t=t.viewBox.baseVal,[[t.x,t.y],[t.x+t.width,t.y+t.height]]):[[0,0],[t.width.baseVal.value,t.height.baseVal.value]]):[[0,0],[t.clientWidth,t.clientHeight]]}function Xe(){return this.__zoom||_e}function Os(t){return-t.deltaY*(t.deltaMode===1?.05:t.deltaMode?1:.002)*(t.ctrlKey?10:1)}function qs(){return navigator.maxTouchPoints||"ontouchstart"in this}function Xs(t,e,n){var r=t.invertX(e[0][0])-n[0][0],i=t.invertX(e[1][0])-n[1][0],o=t.invertY(e[0][1])-n[0][1],s=t.invertY(e[1][1])-n[1][1];return t.translate(i>r?(r+i)/2:Math.min(0,r)||Math.max(0,i),s>o?(o+s)/2:Math.min(0,o)||Math.max(0,s))}function Hs(){var t=Ds,e=Fs,n=Xs,r=Os,i=qs,o=[0,1/0],s=[[-1/0,-1/0],[1/0,1/0]],a=250,u=Yi,c=Nt("start","zoom","end"),l,m,h,f=500,_=150,v=0,y=10;function p(g){g.property("__zoom",Xe).on("wheel.zoom",$,{passive:!1}).on("mousedown.zoom",I).on("dblclick.zoom",z).filter(i).on("touchstart.zoom",P).on("touchmove.zoom",H).on("touchend.zoom touchcancel.zoom",q).style("-webkit-tap-highlight-color","rgba(0,0,0,0)")}p.transform=function(g,N,x,A){var S=g.selection?g.selection():g;S.property("__zoom",Xe),g!==S?k(g,N,x,A):S.interrupt().each(function(){b(this,arguments).event(A).start().zoom(null,typeof N=="function"?N.apply(this,arguments):N).end()})},p.scaleBy=function(g,N,x,A){p.scaleTo(g,function(){var S=this.__zoom.k,C=typeof N=="function"?N.apply(this,arguments):N;return S*C},x,A)},p.scaleTo=function(g,N,x,A){p.transform(g,function(){var S=e.apply(this,arguments),C=this.__zoom,T=x==null?d(S):typeof x=="function"?x.apply(this,arguments):x,L=C.invert(T),R=typeof N=="function"?N.apply(this,arguments):N;return n(E(w(C,R),T,L),S,s)},x,A)},p.translateBy=function(g,N,x,A){p.transform(g,function(){return n(this.__zoom.translate(typeof N=="function"?N.apply(this,arguments):N,typeof x=="function"?x.apply(this,arguments):x),e.apply(this,arguments),s)},null,A)},p.translateTo=function(g,N,x,A,S){p.transform(g,function(){var C=e.apply(this,arguments),T=this.__zoom,L=A==null?d(C):typeof A=="function"?A.apply(this,arguments):A;return n(_e.translate(L[0],L[1]).scale(T.k).translate(typeof N=="function"?-N.apply(this,arguments):-N,typeof x=="function"?-x.apply(this,arguments):-x),C,s)},A,S)};function w(g,N){return N=Math.max(o[0],Math.min(o[1],N)),N===g.k?g:new rt(N,g.x,g.y)}function E(g,N,x){var A=N[0]-x[0]*g.k,S=N[1]-x[1]*g.k;return A===g.x&&S===g.y?g:new rt(g.k,A,S)}function d(g){return[(+g[0][0]+ +g[1][0])/2,(+g[0][1]+ +g[1][1])/2]}function k(g,N,x,A){g.on("start.zoom",function(){b(this,arguments).event(A).start()}).on("interrupt.zoom end.zoom",function(){b(this,arguments).event(A).end()}).tween("zoom",function(){var S=this,C=arguments,T=b(S,C).event(A),L=e.apply(S,C),R=x==null?d(L):typeof x=="function"?x.apply(S,C):x,W=Math.max(L[1][0]-L[0][0],L[1][1]-L[0][1]),B=S.__zoom,V=typeof N=="function"?N.apply(S,C):N,j=u(B.invert(R).concat(W/B.k),V.invert(R).concat(W/V.k));return function(Y){if(Y===1)Y=V;else{var tt=j(Y),Kt=W/tt[2];Y=new rt(Kt,R[0]-tt[0]*Kt,R[1]-tt[1]*Kt)}T.zoom(null,Y)}})}function b(g,N,x){return!x&&g.__zooming||new M(g,N)}function M(g,N){this.that=g,this.args=N,this.active=0,this.sourceEvent=null,this.extent=e.apply(g,N),this.taps=0}M.prototype={event:function(g){return g&&(this.sourceEvent=g),this},start:function(){return++this.active===1&&(this.that.__zooming=this,this.emit("start")),this},zoom:function(g,N){return this.mouse&&g!=="mouse"&&(this.mouse[1]=N.invert(this.mouse[0])),this.touch0&&g!=="touch"&&(this.touch0[1]=N.invert(this.touch0[0])),this.touch1&&g!=="touch"&&(this.touch1[1]=N.invert(this.touch1[0])),this.that.__zoom=N,this.emit("zoom"),this},end:function(){return--this.active===0&&(delete this.that.__zooming,this.emit("end")),this},emit:function(g){var N=Z(this.that).datum();c.call(g,this.that,new Bs(g,{sourceEvent:this.sourceEvent,target:p,transform:this.that.__zoom,dispatch:c}),N)}};function $(g,...N){if(!t.apply(this,arguments))return;var x=b(this,N).event(g),A=this.__zoom,S=Math.max(o[0],Math.min(o[1],A.k*Math.pow(2,r.apply(this,arguments)))),C=nt(g);if(x.wheel)(x.mouse[0][0]!==C[0]||x.mouse[0][1]!==C[1])&&(x.mouse[1]=A.invert(x.mouse[0]=C)),clearTimeout(x.wheel);else{if(A.k===S)return;x.mouse=[C,A.invert(C)],Bt(this),x.start()}pt(g),x.wheel=setTimeout(T,_),x.zoom("mouse",n(E(w(A,S),x.mouse[0],x.mouse[1]),x.extent,s));function T(){x.wheel=null,x.end()}}function I(g,...N){if(h||!t.apply(this,arguments))return;var x=g.currentTarget,A=b(this,N,!0).event(g),S=Z(g.view).on("mousemove.zoom",R,!0).on("mouseup.zoom",W,!0),C=nt(g,x),T=g.clientX,L=g.clientY;sn(g.view),Jt(g),A.mouse=[C,this.__zoom.invert(C)],Bt(this),A.start();function R(B){if(pt(B),!A.moved){var V=B.clientX-T,j=B.clientY-L;A.moved=V*V+j*j>v}A.event(B).zoom("mouse",n(E(A.that.__zoom,A.mouse[0]=nt(B,x),A.mouse[1]),A.extent,s))}function W(B){S.on("mousemove.zoom mouseup.zoom",null),an(B.view,A.moved),pt(B),A.event(B).end()}}function z(g,...N){if(t.apply(this,arguments)){var x=this.__zoom,A=nt(g.changedTouches?g.changedTouches[0]:g,this),S=x.invert(A),C=x.k*(g.shiftKey?.5:2),T=n(E(w(x,C),A,S),e.apply(this,N),s);pt(g),a>0?Z(this).transition().duration(a).call(k,T,A,g):Z(this).call(p.transform,T,A,g)}}function P(g,...N){if(t.apply(this,arguments)){var x=g.touches,A=x.length,S=b(this,N,g.changedTouches.length===A).event(g),C,T,L,R;for(Jt(g),T=0;T<A;++T)L=x[T],R=nt(L,this),R=[R,this.__zoom.invert(R),L.identifier],S.touch0?!S.touch1&&S.touch0[2]!==R[2]&&(S.touch1=R,S.taps=0):(S.touch0=R,C=!0,S.taps=1+!!l);l&&(l=clearTimeout(l)),C&&(S.taps<2&&(m=R[0],l=setTimeout(function(){l=null},f)),Bt(this),S.start())}}function H(g,...N){if(this.__zooming){var x=b(this,N).event(g),A=g.changedTouches,S=A.length,C,T,L,R;for(pt(g),C=0;C<S;++C)T=A[C],L=nt(T,this),x.touch0&&x.touch0[2]===T.identifier?x.touch0[0]=L:x.touch1&&x.touch1[2]===T.identifier&&(x.touch1[0]=L);if(T=x.that.__zoom,x.touch1){var W=x.touch0[0],B=x.touch0[1],V=x.touch1[0],j=x.touch1[1],Y=(Y=V[0]-W[0])*Y+(Y=V[1]-W[1])*Y,tt=(tt=j[0]-B[0])*tt+(tt=j[1]-B[1])*tt;T=w(T,Math.sqrt(Y/tt)),L=[(W[0]+V[0])/2,(W[1]+V[1])/2],R=[(B[0]+j[0])/2,(B[1]+j[1])/2]}else if(x.touch0)L=x.touch0[0],R=x.touch0[1];else return;x.zoom("touch",n(E(T,L,R),x.extent,s))}}function q(g,...N){if(this.__zooming){var x=b(this,N).event(g),A=g.changedTouches,S=A.length,C,T;for(Jt(g),h&&clearTimeout(h),h=setTimeout(function(){h=null},f),C=0;C<S;++C)T=A[C],x.touch0&&x.touch0[2]===T.identifier?delete x.touch0:x.touch1&&x.touch1[2]===T.identifier&&delete x.touch1;if(x.touch1&&!x.touch0&&(x.touch0=x.touch1,delete x.touch1),x.touch0)x.touch0[1]=this.__zoom.invert(x.touch0[0]);else if(x.end(),x.taps===2&&(T=nt(T,this),Math.hypot(m[0]-T[0],m[1]-T[1])<y)){var L=Z(this).on("dblclick.zoom");L&&L.apply(this,arguments)}}}return p.wheelDelta=function(g){return arguments.length?(r=typeof g=="function"?g:Ct(+g),p):r},p.filter=function(g){return arguments.length?(t=typeof g=="function"?g:Ct(!!g),p):t},p.touchable=function(g){return arguments.length?(i=typeof g=="function"?g:Ct(!!g),p):i},p.extent=function(g){return arguments.length?(e=typeof g=="function"?g:Ct([[+g[0][0],+g[0][1]],[+g[1][0],+g[1][1]]]),p):e},p.scaleExtent=function(g){return arguments.length?(o[0]=+g[0],o[1]=+g[1],p):[o[0],o[1]]},p.translateExtent=function(g){return arguments.length?(s[0][0]=+g[0][0],s[1][0]=+g[1][0],s[0][1]=+g[0][1],s[1][1]=+g[1][1],p):[[s[0][0],s[0][1]],[s[1][0],s[1][1]]]},p.constrain=function(g){return arguments.length?(n=g,p):n},p.duration=function(g){return arguments.length?(a=+g,p):a},p.interpolate=function(g){return arguments.length?(u=g,p):u},p.on=function(){var g=c.on.apply(c,arguments);return g===c?p:g},p.clickDistance=function(g){return arguments.length?(v=(g=+g)*g,p):Math.sqrt(v)},p.tapDistance=function(g){return arguments.length?(y=+g,p):y},p}const jt=10,He=42,Ge=.08,Gs=.9,Vs=.03,Ys=150,Us=30;function Ks(t,e,n){const r=Math.sqrt(e),i=Math.sqrt(n);if(i<=r)return(jt+He)/2;const o=(Math.sqrt(t)-r)/(i-r);return jt+o*(He-jt)}function Ws(t){return Ge+t*(Gs-Ge)}function Zs(t,e){return t>=1?e:Math.min(e,Math.max(Us,Math.round(Ys*t)))}function Ve(t,e){const n=Zs(e,t.length),r=[...t].sort((i,o)=>o.freq-i.freq||(i.id<o.id?-1:1));return new Set(r.slice(0,n).map(i=>i.id))}const Tt=["#4269d0","#efb118","#ff725c","#6cc5b0","#3ca951","#ff8ab7","#a463f2","#97bbf5","#9c6b4e","#d4af0e","#00b2c5","#94748c"],Qs="#5b6470";function zt(t,e){return!e||t===null?Qs:Tt[(t%Tt.length+Tt.length)%Tt.length]}const Js=-180,js=70,ta=.6,ea=2;function na(t){const e=.27*t.labelPx*t.id.length*.5,n=t.labelPx*.6;return Math.max(n,e)+ea}class ra{nodes;simulation;links=[];byId=new Map;svg;root;linkGroup;nodeGroup;zoomBehavior;opts;coloring=!0;hovered=null;selected=null;constructor(e,n,r={}){this.opts=r;const i=n.nodes.map(a=>a.freq),o=Math.min(...i),s=Math.max(...i);this.nodes=n.nodes.map(a=>({id:a.id,freq:a.freq,community:a.community,labelPx:Ks(a.freq,o,s)}));for(const a of this.nodes)this.byId.set(a.id,a);this.svg=Z(e),this.root=this.svg.append("g").attr("class","viewport"),this.linkGroup=this.root.append("g").attr("class","links"),this.nodeGroup=this.root.append("g").attr("class","nodes"),this.simulation=Is(this.nodes).force("charge",Ls().strength(Js)).force("collide",Ns(a=>na(a)).strength(.9)).force("x",Ps(0).strength(.04)).force("y",Rs(0).strength(.04)).on("tick",()=>this.tick()),this.zoomBehavior=Hs().scaleExtent([.05,8]).on("zoom",a=>{this.root.attr("transform",a.transform.toString()),this.opts.onZoom?.(a.transform.k)}),this.svg.call(this.zoomBehavior),this.svg.on("click.background",a=>{a.target===e&&this.opts.onSelect?.(null)}),this.renderNodes()}setLinks(e){this.links=e.map(r=>({key:Ye(r.source,r.target),source:this.byId.get(r.source),target:this.byId.get(r.target),raw:r.raw,weight:r.weight,primary:r.primary})),this.simulation.force("link",Es(this.links).id(r=>r.id).distance(js).strength(r=>ta*r.weight));const n=this.linkGroup.selectAll("line").data(this.links,r=>r.key);n.exit().remove(),n.enter().append("line").attr("class","link").merge(n).attr("data-key",r=>r.key).attr("stroke","currentColor"),this.applyLinkOpacity(),this.simulation.alpha(.5).restart()}setLabeled(e){this.nodeGroup.selectAll("text").style("display",n=>e.has(n.id)?null:"none")}setCommunityColoring(e){this.coloring=e,this.nodeGroup.selectAll("text").attr("fill",n=>zt(n.community,e)),this.nodeGroup.selectAll("circle").attr("fill",n=>zt(n.community,e))}hover(e){this.hovered=e,this.applyLinkOpacity(),this.nodeGroup.selectAll("g.node").classed("hovered",n=>n.id===e)}select(e){this.selected=e,this.nodeGroup.selectAll("g.node").classed("selected",n=>n.id===e)}centerOn(e,n=1.2){const r=this.byId.get(e);if(!r||r.x===void 0||r.y===void 0)return;const i=this.svg.node(),o=i.clientWidth||Number(i.getAttribute("width"))||800,s=i.clientHeight||Number(i.getAttribute("height"))||600,a=_e.translate(o/2,s/2).scale(n).translate(-r.x,-r.y);this.svg.call(this.zoomBehavior.transform,a)}displayedLinkCount(){return this.links.length}applyLinkOpacity(){const e=this.hovered??this.selected,n=e?Sn(e,this.links.map(r=>({source:r.source.id,target:r.target.id,raw:r.raw,weight:r.weight,primary:r.primary}))):null;this.linkGroup.selectAll("line").attr("stroke-opacity",r=>n&&!n.links.has(r.key)?Vs:Ws(r.weight))}renderNodes(){const e=this.nodeGroup.selectAll("g.node").data(this.nodes,n=>n.id).enter().append("g").attr("class","node").attr("data-id",n=>n.id);e.append("circle").attr("r",3).attr("fill",n=>zt(n.community,this.coloring)),e.append("text").text(n=>n.id).attr("font-size",n=>`${n.labelPx.toFixed(1)}px`).attr("dy",n=>-n.labelPx*.25).attr("text-anchor","middle").attr("fill",n=>zt(n.community,this.coloring)),e.on("mouseenter",(n,r)=>this.opts.onHover?.(r.id)).on("mouseleave",()=>this.opts.onHover?.(null)).on("click",(n,r)=>{n.stopPropagation(),this.opts.onSelect?.(r.id)}),e.call(_i().on("start",(n,r)=>this.dragStarted(n,r)).on("drag",(n,r)=>this.dragged(n,r)).on("end",(n,r)=>this.dragEnded(n,r)))}dragStarted(e,n){e.active||this.simulation.alphaTarget(.3).restart(),n.fx=n.x,n.fy=n.y}dragged(e,n){n.fx=e.x,n.fy=e.y}dragEnded(e,n){e.active||this.simulation.alphaTarget(0),n.fx=null,n.fy=null}tick(){this.linkGroup.selectAll("line").attr("x1",e=>e.source.x??0).attr("y1",e=>e.source.y??0).attr("x2",e=>e.target.x??0).attr("y2",e=>e.target.y??0),this.nodeGroup.selectAll("g.node").attr("transform",e=>`translate(${e.x??0},${e.y??0})`)}}function It(t){return typeof t=="number"&&Number.isInteger(t)}function te(t){return typeof t=="number"&&Number.isFinite(t)}function ia(t){const e=[],n=o=>{e.length<20&&e.push(o)};if(typeof t!="object"||t===null)return["map is not an object"];const r=t,i=r.meta;if(typeof i!="object"||i===null)n("meta missing");else{for(const s of["vectorSize","contextSize","epochs","terms","cap","seed"])It(i[s])||n(`meta.${s} must be an integer`);for(const s of["percentile","basePercentile"]){const a=i[s];(!te(a)||a<=0||a>=1)&&n(`meta.${s} must be in (0, 1)`)}const o=i.corpus;if(typeof o!="object"||o===null)n("meta.corpus missing");else for(const s of["documents","tokens","vocab"])It(o[s])||n(`meta.corpus.${s} must be an integer`)}if(!Array.isArray(r.nodes))n("nodes must be an array");else{const o=new Set;r.nodes.forEach((s,a)=>{const u=s;if(typeof u?.id!="string"||u.id.length===0){n(`nodes[${a}].id must be a non-empty string`);return}(!It(u.freq)||u.freq<1)&&n(`nodes[${a}].freq must be a positive integer`),u.community!==null&&!It(u.community)&&n(`nodes[${a}].community must be an integer or null`),o.has(u.id)&&n(`duplicate node id ${u.id}`),o.add(u.id)}),Array.isArray(r.links)?r.links.forEach((s,a)=>{const u=s;if(typeof u?.source!="string"||typeof u?.target!="string"){n(`links[${a}] needs string source and target`);return}(!o.has(u.source)||!o.has(u.target))&&n(`links[${a}] references a missing node`),u.source>=u.target&&n(`links[${a}] must have source < target`),(!te(u.raw)||u.raw<-1||u.raw>1)&&n(`links[${a}].raw must be in [-1, 1]`),(!te(u.weight)||u.weight<0||u.weight>1)&&n(`links[${a}].weight must be in [0, 1]`),typeof u.primary!="boolean"&&n(`links[${a}].primary must be boolean`)}):n("links must be an array")}return e}const oa=.999;function wn(t,e){return Number.isFinite(t)?Math.min(oa,Math.max(e,t)):e}function bn(t,e){return Number.isFinite(t)?Math.max(1,Math.min(Math.round(t),Math.max(1,e))):e}function sa(t,e,n,r,i){const o=new URLSearchParams(t),s=o.has("p")?Number(o.get("p")):n,a=o.has("l")?Number(o.get("l")):r;return{zoom:1,liveP:wn(s,e),liveL:bn(a,i),selectedTerm:null,communityColoring:!0}}function aa(t,e){const n=new URLSearchParams(e);return n.set("p",t.liveP.toFixed(4).replace(/0+$/,"").replace(/\.$/,"")),n.set("l",String(t.liveL)),`?${n.toString()}`}function ee(t){const e=document.getElementById("banner");e.textContent=t,e.classList.add("visible")}function ua(t){const e=new Map;for(const n of t)e.set(n.source,(e.get(n.source)??0)+1),e.set(n.target,(e.get(n.target)??0)+1);return Math.max(1,...e.values())}function ca(t){const e=ua(t.links),n=sa(location.search,t.meta.basePercentile,t.meta.percentile,t.meta.cap,e),r=document.getElementById("panel"),i=document.getElementById("neighbors"),o=document.getElementById("compound-results"),s=document.getElementById("depth"),a=document.getElementById("k"),u=new En,c=new ra(document.getElementById("graph"),t,{onZoom:b=>{n.zoom=b,c.setLabeled(Ve(t.nodes,b))},onHover:b=>c.hover(b),onSelect:b=>h(b)});function l(){const b=$n(t.links,n.liveP,n.liveL);c.setLinks(b),document.getElementById("link-count").textContent=`${b.length}/${t.links.length} links`,history.replaceState(null,"",aa(n,location.search))}async function m(b){try{const M=Number(s.value),$=Number(a.value),I=await u.fetch(b,$,M);I&&Tn(i,I)}catch(M){we(i,M instanceof Dt?M.code:"request failed")}}function h(b){if(n.selectedTerm=b,c.select(b),!b){r.classList.remove("visible");return}r.classList.add("visible"),document.getElementById("panel-term").textContent=b,m(b)}const f=document.getElementById("live-p"),_=document.getElementById("live-l");f.min=String(t.meta.basePercentile),f.max="0.999",f.step="0.0005",f.value=String(n.liveP),_.min="1",_.max=String(e),_.step="1",_.value=String(n.liveL);const v=document.getElementById("live-p-value"),y=document.getElementById("live-l-value");v.textContent=n.liveP.toFixed(4),y.textContent=String(n.liveL),f.addEventListener("input",()=>{n.liveP=wn(Number(f.value),t.meta.basePercentile),v.textContent=n.liveP.toFixed(4),l()}),_.addEventListener("input",()=>{n.liveL=bn(Number(_.value),e),y.textContent=String(n.liveL),l()});const p=document.getElementById("coloring");p.checked=n.communityColoring,p.addEventListener("change",()=>{n.communityColoring=p.checked,c.setCommunityColoring(p.checked)});const w=document.getElementById("search"),E=document.getElementById("search-status");w.addEventListener("input",()=>{const b=Cn(w.value,t.nodes.map(M=>M.id));w.value.trim()===""?E.textContent="":b.length===0?E.textContent="no match":b.length===1?(E.textContent=b[0],c.centerOn(b[0]),c.hover(b[0])):E.textContent=`${b.length} matches`}),s.addEventListener("change",()=>{n.selectedTerm&&m(n.selectedTerm)}),a.addEventListener("change",()=>{n.selectedTerm&&m(n.selectedTerm)}),document.getElementById("close-panel").addEventListener("click",()=>h(null));const d=document.getElementById("compound-input");d.addEventListener("keydown",b=>{if(b.key!=="Enter")return;const M=d.value.split(",").map($=>$.trim()).filter(Boolean);M.length!==0&&kn(M,10).then($=>zn(o,$)).catch($=>we(o,$ instanceof Dt?$.code:"request failed"))}),c.setCommunityColoring(n.communityColoring),c.setLabeled(Ve(t.nodes,n.zoom)),l();const k=t.meta;document.title=`topic map (${k.terms} terms)`}Nn().then(t=>{const e=ia(t);if(e.length>0){ee(`map file failed validation:
${e.join(`
`)}`);return}if(t.nodes.length===0){ee("map has no nodes");return}ca(t)}).catch(t=>{ee(t instanceof Dt?`map not available: ${t.code}`:"map not available: request failed")});
