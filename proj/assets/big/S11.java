class S11 extends Abstract3 {
  void enter() {
    new S98();
    new S41();
    if (x5 > 0) {
      send("msg6");
      if (x5 > 0) {
        try {
          send("msg13");
          new S98();
          send("msg5");
        } catch (TimeoutException e) {
          new S67();
          new S8();
        }
        send("msg6");
        new S33();
        new S24();
      } else {
        try {
          new State();
          new S1();
          log("note");
          new S59();
        } catch (TimeoutException e) {
          send("msg10");
          new S57();
          new S31();
          new State();
        } catch (TimeoutException e) {
          new S60();
        }
      }
    }
  }
  public void exit() {
    new S13();
    switch (event) {
      case EV375:
        try {
          new Helper();
          send("msg18");
        } finally {
          send("msg16");
          send("msg13");
          if (x1 > 0) {
            log("note");
            new S54();
            send("msg11");
          } else {
            new S43();
            send("msg16");
            new S28();
            log("note");
          }
        }
        break;
      case EV376:
        send("msg2");
        try {
          send("msg7");
        } finally {
          try {
            new S93();
            send("msg6");
          } catch (IllegalStateException e) {
            send("msg4");
          }
          log("note");
          new S39();
          new S35();
        }
        if (x6 > 0) {
          send("msg7");
        } else {
          new S87();
          try {
            new S83();
            new S63();
          } catch (IOException e) {
            send("msg0");
            send("msg15");
            new S46();
            new S68();
          } catch (IllegalStateException e) {
            send("msg19");
            send("msg16");
            send("msg5");
          }
        }
        break;
      case EV377:
        log("note");
        send("msg6");
        break;
    }
    log("note");
  }
  void handle() {
    new S26();
    new S17();
  }
  public void tick() {
    new S69();
    switch (event) {
      case EV378:
        new S29();
        send("msg19");
        break;
      case EV379:
        new State();
        break;
    }
    send("msg12");
    try {
      new S17();
      switch (event) {
        case EV380:
          new S52();
          break;
        case EV381:
          switch (event) {
            case EV382:
              send("msg16");
              new S84();
              new S100();
              new S41();
              break;
            case EV383:
              new S60();
              new S16();
              send("msg0");
              break;
          }
          send("msg18");
          break;
        case EV384:
          switch (event) {
            case EV385:
              new S87();
              new S36();
              break;
          }
          send("msg13");
          if (x7 > 0) {
            new S59();
          }
          break;
      }
    } catch (TimeoutException e) {
      new S14();
      if (x6 > 0) {
        switch (event) {
          case EV386:
            send("msg17");
            new S31();
            break;
          case EV387:
            new S24();
            break;
          case EV388:
            log("note");
            new S75();
            break;
        }
        log("note");
        new S96();
      }
      new S98();
    } catch (IllegalStateException e) {
      if (x4 > 0) {
        send("msg1");
        send("msg12");
        try {
          new S50();
          new S12();
          new S5();
          new S82();
        } catch (IllegalStateException e) {
          log("note");
          new S48();
        } catch (IOException e) {
          send("msg19");
          new S31();
        }
      } else {
        try {
          new Helper();
          log("note");
          new S95();
          log("note");
        } catch (IllegalStateException e) {
          new State();
          new S52();
        } catch (IllegalStateException e) {
          new S31();
          new S30();
        }
        if (x9 > 0) {
          send("msg16");
          new State();
          send("msg14");
          send("msg1");
        }
      }
    }
  }
  void reset() {
    if (x0 > 0) {
      if (x2 > 0) {
        log("note");
        if (x0 > 0) {
          new S9();
          send("msg12");
          new S85();
        } else {
          new S97();
          new S83();
        }
      }
    } else {
      try {
        send("msg13");
      } catch (IllegalStateException e) {
        switch (event) {
          case EV389:
            new S69();
            send("msg12");
            new Helper();
            send("msg5");
            break;
          case EV390:
            new S20();
            break;
          case EV391:
            send("msg5");
            log("note");
            break;
        }
      } finally {
        new S7();
      }
      if (x6 > 0) {
        try {
          send("msg8");
        } catch (TimeoutException e) {
          send("msg10");
          send("msg5");
          new S48();
        } catch (IOException e) {
          log("note");
          new S28();
          send("msg6");
        }
        new S14();
        send("msg15");
      }
      new S30();
      send("msg9");
    }
    switch (event) {
      case EV392:
        try {
          try {
            send("msg8");
            log("note");
          } catch (IllegalStateException e) {
            send("msg2");
            new S84();
          } catch (TimeoutException e) {
            new S85();
            new S98();
            new S28();
          }
        } catch (IOException e) {
          new State();
        } catch (TimeoutException e) {
          new S62();
          log("note");
          send("msg11");
        }
        new S43();
        send("msg19");
        switch (event) {
          case EV393:
            send("msg15");
            new S38();
            break;
        }
        break;
    }
  }
  void open() {
    new S26();
    send("msg2");
  }
  void close() {
    send("msg9");
    new S9();
    new S87();
  }
  void start() {
    new S65();
    if (x1 > 0) {
      new S29();
      new S75();
    } else {
      send("msg3");
    }
    if (x7 > 0) {
      try {
        send("msg15");
        new S52();
      } catch (TimeoutException e) {
        try {
          new S15();
          send("msg12");
          send("msg5");
        } finally {
          send("msg11");
        }
        log("note");
        log("note");
      } finally {
        switch (event) {
          case EV394:
            send("msg12");
            break;
        }
        new State();
        new S27();
      }
      new S40();
    }
  }
  void stop() {
    try {
      new S14();
    } catch (IOException e) {
      if (x3 > 0) {
        switch (event) {
          case EV395:
            send("msg13");
            break;
        }
      } else {
        new S72();
        try {
          new S57();
          new State();
          new S72();
        } finally {
          send("msg0");
          send("msg11");
          new S52();
        }
      }
      new S9();
      send("msg16");
    } catch (TimeoutException e) {
      try {
        send("msg4");
        switch (event) {
          case EV396:
            send("msg12");
            new S89();
            break;
          case EV397:
            log("note");
            break;
        }
        new S38();
      } catch (TimeoutException e) {
        new S20();
      } catch (IOException e) {
        if (x3 > 0) {
          new S83();
          send("msg12");
          send("msg6");
        } else {
          new S81();
          log("note");
          new S25();
        }
        send("msg18");
        new S84();
        new S77();
      }
      switch (event) {
        case EV398:
          log("note");
          try {
            new S30();
            send("msg3");
            log("note");
          } catch (IllegalStateException e) {
            new S36();
            send("msg11");
            new S53();
            send("msg14");
          }
          new Helper();
          new State();
          break;
        case EV399:
          new S62();
          break;
        case EV400:
          if (x6 > 0) {
            send("msg5");
            new S14();
            send("msg14");
            new Helper();
          }
          break;
      }
      try {
        send("msg3");
        send("msg16");
        new S29();
      } catch (TimeoutException e) {
        send("msg18");
        send("msg13");
        try {
          new S17();
        } finally {
          send("msg13");
          send("msg4");
        }
      } finally {
        new S49();
      }
      new S89();
    }
    switch (event) {
      case EV401:
        log("note");
        log("note");
        send("msg15");
        new S84();
        break;
      case EV402:
        new S14();
        break;
      case EV403:
        new S74();
        switch (event) {
          case EV404:
            new S82();
            new S34();
            new S64();
            new S66();
            break;
        }
        break;
    }
    send("msg13");
  }
  void pause() {
    try {
      log("note");
      new S67();
      new S77();
    } finally {
      send("msg14");
      send("msg3");
    }
    new Helper();
  }
}
