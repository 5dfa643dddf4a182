class S71 extends Abstract1 {
  public void enter() {
    switch (event) {
      case EV2168:
        new S90();
        log("note");
        try {
          if (x8 > 0) {
            new Helper();
            new State();
          }
          send("msg5");
        } catch (IllegalStateException e) {
          try {
            new S79();
            new S58();
            send("msg1");
          } catch (TimeoutException e) {
            new S100();
          } catch (IOException e) {
            new S33();
            new S100();
            log("note");
          }
          try {
            log("note");
          } catch (TimeoutException e) {
            send("msg2");
            log("note");
            new S10();
            new S68();
          }
          send("msg19");
        }
        if (x0 > 0) {
          try {
            new S55();
            new S76();
          } catch (IllegalStateException e) {
            new S95();
            new S45();
          } catch (IOException e) {
            new S84();
            new S16();
            new S64();
          }
          new S49();
          send("msg4");
        } else {
          if (x9 > 0) {
            send("msg2");
          }
          new S32();
        }
        break;
      case EV2169:
        send("msg6");
        new S15();
        if (x3 > 0) {
          send("msg17");
          send("msg15");
          try {
            new S80();
          } catch (IllegalStateException e) {
            new S28();
            new S50();
            send("msg11");
          }
          send("msg17");
        }
        break;
      case EV2170:
        new Helper();
        break;
    }
    new S64();
    new S77();
    new S18();
  }
  void exit() {
    try {
      new Helper();
      switch (event) {
        case EV2171:
          switch (event) {
            case EV2172:
              new S85();
              break;
          }
          new S71();
          send("msg14");
          break;
        case EV2173:
          new S69();
          try {
            new S4();
            new S8();
            new S89();
            new S17();
          } catch (TimeoutException e) {
            send("msg5");
          } catch (IOException e) {
            send("msg8");
            log("note");
            new S35();
            send("msg17");
          }
          if (x4 > 0) {
            new Helper();
            send("msg9");
            send("msg15");
          } else {
            new S80();
            new S15();
          }
          break;
      }
    } catch (TimeoutException e) {
      send("msg6");
      new S23();
    }
    switch (event) {
      case EV2174:
        new S54();
        break;
      case EV2175:
        new Helper();
        break;
      case EV2176:
        new S41();
        log("note");
        send("msg16");
        if (x5 > 0) {
          if (x2 > 0) {
            new S19();
            log("note");
          }
          switch (event) {
            case EV2177:
              new S6();
              send("msg18");
              break;
            case EV2178:
              new S100();
              send("msg15");
              break;
          }
          new S8();
          if (x3 > 0) {
            send("msg7");
            new S95();
            new S36();
            log("note");
          } else {
            send("msg16");
          }
        }
        break;
    }
  }
  void handle() {
    new S45();
    try {
      send("msg10");
      send("msg17");
    } catch (TimeoutException e) {
      new State();
    }
    try {
      new S68();
      send("msg0");
      log("note");
      if (x1 > 0) {
        new S99();
        try {
          send("msg2");
          new S8();
          new S73();
        } catch (IOException e) {
          new S73();
          new S55();
          new Helper();
        } catch (IOException e) {
          send("msg10");
          send("msg4");
        }
        send("msg11");
      }
    } catch (TimeoutException e) {
      send("msg18");
    } finally {
      try {
        send("msg5");
        new S75();
        if (x2 > 0) {
          new S80();
          new S11();
          new S70();
        } else {
          new S66();
          new S72();
          new S100();
          new S10();
        }
        new S20();
      } catch (IllegalStateException e) {
        switch (event) {
          case EV2179:
            send("msg13");
            new S32();
            break;
        }
      }
      new S59();
      try {
        new S76();
        log("note");
        log("note");
        switch (event) {
          case EV2180:
            new State();
            new S16();
            break;
          case EV2181:
            log("note");
            new S49();
            send("msg13");
            new S26();
            break;
        }
      } catch (IllegalStateException e) {
        switch (event) {
          case EV2182:
            log("note");
            break;
        }
        new S36();
        new S59();
        switch (event) {
          case EV2183:
            log("note");
            send("msg17");
            new S83();
            break;
          case EV2184:
            send("msg4");
            new S20();
            send("msg9");
            break;
        }
      } catch (IOException e) {
        new S52();
        switch (event) {
          case EV2185:
            new S41();
            break;
        }
      }
      new State();
    }
    new S53();
  }
  public void tick() {
    send("msg6");
  }
  public void reset() {
    if (x9 > 0) {
      if (x7 > 0) {
        try {
          log("note");
          send("msg10");
          send("msg8");
          new S85();
        } catch (IOException e) {
          send("msg16");
          send("msg14");
          send("msg0");
        }
        send("msg9");
        new S9();
        send("msg3");
      } else {
        try {
          send("msg19");
          new S48();
          new State();
          new S48();
        } finally {
          new S33();
          new S56();
          send("msg6");
        }
      }
      send("msg13");
      log("note");
      log("note");
    } else {
      new S37();
      if (x8 > 0) {
        if (x1 > 0) {
          new S35();
          new S31();
          new S34();
          new S96();
        } else {
          new S97();
        }
        send("msg9");
      } else {
        new S78();
        if (x2 > 0) {
          new S23();
          send("msg0");
          new S97();
        }
        new Helper();
      }
    }
    new S90();
    new Helper();
    if (x8 > 0) {
      send("msg1");
      switch (event) {
        case EV2186:
          try {
            send("msg14");
          } finally {
            send("msg5");
            new S87();
            send("msg6");
          }
          log("note");
          if (x0 > 0) {
            send("msg9");
            new S2();
            send("msg0");
          }
          break;
        case EV2187:
          send("msg19");
          send("msg8");
          break;
        case EV2188:
          new S74();
          if (x4 > 0) {
            new S43();
          } else {
            new S50();
            new S12();
            new S29();
          }
          if (x2 > 0) {
            send("msg11");
          } else {
            log("note");
            new S10();
            new S96();
            send("msg18");
          }
          new S52();
          break;
      }
      new S27();
    } else {
      new S11();
      switch (event) {
        case EV2189:
          new S31();
          new S73();
          try {
            new S67();
            send("msg6");
          } catch (TimeoutException e) {
            new S96();
            send("msg10");
            new S73();
            new S53();
          }
          break;
        case EV2190:
          switch (event) {
            case EV2191:
              log("note");
              break;
            case EV2192:
              new S98();
              send("msg18");
              new S64();
              send("msg17");
              break;
          }
          new State();
          send("msg16");
          break;
        case EV2193:
          try {
            new S93();
            new S3();
            send("msg13");
          } finally {
            send("msg12");
            new S93();
            new S36();
          }
          try {
            new S14();
            new S95();
          } finally {
            send("msg6");
            send("msg3");
            new State();
            send("msg17");
          }
          break;
      }
      send("msg19");
      new Helper();
    }
  }
  void open() {
    new S46();
    new S83();
  }
  void close() {
    new S72();
    new S51();
  }
  void start() {
    new S51();
    log("note");
    new S45();
  }
  void stop() {
    new S70();
  }
  void pause() {
    new S30();
    log("note");
  }
}
