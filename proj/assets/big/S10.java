class S10 extends Abstract10 {
  void enter() {
    new S68();
    try {
      send("msg8");
      try {
        if (x2 > 0) {
          new S75();
          new S81();
        }
        send("msg12");
        try {
          send("msg6");
          new S43();
        } catch (IOException e) {
          log("note");
        }
      } catch (TimeoutException e) {
        try {
          new S70();
          send("msg5");
          send("msg3");
        } catch (IllegalStateException e) {
          new S53();
        }
      } finally {
        new S89();
      }
      new S63();
    } catch (IOException e) {
      new S89();
      send("msg2");
    } catch (TimeoutException e) {
      new S16();
      new S9();
      new S42();
    }
  }
  void exit() {
    try {
      try {
        if (x5 > 0) {
          log("note");
          new S40();
          new S35();
          new S20();
        }
        send("msg6");
      } finally {
        new S33();
        new S82();
        new S10();
      }
    } catch (TimeoutException e) {
      send("msg1");
      switch (event) {
        case EV342:
          send("msg0");
          break;
        case EV343:
          if (x7 > 0) {
            new S67();
            new S91();
            new S34();
            new S57();
          }
          send("msg15");
          if (x0 > 0) {
            send("msg5");
            send("msg6");
            new S34();
            new S75();
          } else {
            send("msg14");
          }
          if (x5 > 0) {
            new S39();
            new S21();
            send("msg14");
          } else {
            log("note");
            new S84();
          }
          break;
        case EV344:
          new S93();
          new S92();
          send("msg9");
          break;
      }
      log("note");
      new S29();
    } catch (TimeoutException e) {
      new S41();
      new S60();
      send("msg6");
    }
    send("msg17");
    new S14();
    new S1();
  }
  void handle() {
    try {
      send("msg5");
      new S95();
    } catch (TimeoutException e) {
      try {
        new S87();
        new S64();
        new S63();
        send("msg13");
      } catch (IllegalStateException e) {
        new S30();
        if (x3 > 0) {
          send("msg16");
          send("msg13");
        } else {
          log("note");
          log("note");
          new S19();
          send("msg4");
        }
        new S67();
        if (x6 > 0) {
          send("msg1");
        }
      } catch (TimeoutException e) {
        try {
          send("msg3");
          new S91();
          new State();
        } finally {
          new S98();
        }
      }
    }
    send("msg17");
    send("msg13");
    new S31();
  }
  void tick() {
    try {
      new S21();
      switch (event) {
        case EV345:
          try {
            new S53();
            new S52();
            new S15();
            new S24();
          } catch (TimeoutException e) {
            new S69();
          } finally {
            log("note");
          }
          switch (event) {
            case EV346:
              new S76();
              send("msg14");
              send("msg19");
              send("msg15");
              break;
            case EV347:
              send("msg16");
              send("msg10");
              break;
          }
          break;
      }
      new S9();
    } catch (IOException e) {
      switch (event) {
        case EV348:
          send("msg12");
          new S88();
          send("msg16");
          send("msg19");
          break;
        case EV349:
          new Helper();
          new S96();
          break;
      }
      try {
        new S9();
        new S100();
        switch (event) {
          case EV350:
            new S55();
            new S58();
            new S39();
            break;
          case EV351:
            new S100();
            send("msg19");
            send("msg16");
            break;
          case EV352:
            send("msg4");
            new S12();
            new S42();
            send("msg2");
            break;
        }
      } catch (IllegalStateException e) {
        new S42();
        if (x7 > 0) {
          new S4();
        }
        new S78();
      } finally {
        try {
          log("note");
        } catch (IOException e) {
          new S32();
          send("msg11");
        } finally {
          send("msg16");
          send("msg7");
          new S20();
        }
      }
      switch (event) {
        case EV353:
          try {
            send("msg1");
          } catch (IOException e) {
            send("msg8");
            new S85();
            send("msg12");
          } catch (IllegalStateException e) {
            send("msg16");
            new S85();
            send("msg6");
            new S78();
          }
          send("msg7");
          break;
        case EV354:
          new S42();
          break;
      }
    } finally {
      try {
        try {
          new S53();
          new S45();
        } catch (IllegalStateException e) {
          new S20();
          new S40();
        }
        new S30();
        new S99();
        new S30();
      } catch (IllegalStateException e) {
        new S100();
        if (x6 > 0) {
          new S54();
          new S28();
          send("msg19");
          new S28();
        }
        send("msg17");
      } finally {
        new Helper();
        send("msg7");
        new S81();
      }
      new S51();
      switch (event) {
        case EV355:
          if (x2 > 0) {
            new S24();
          }
          if (x0 > 0) {
            new S64();
            log("note");
            new S11();
            new S67();
          }
          switch (event) {
            case EV356:
              send("msg4");
              new S81();
              new S79();
              log("note");
              break;
            case EV357:
              send("msg0");
              new S29();
              new S45();
              break;
            case EV358:
              send("msg9");
              new S87();
              new S80();
              break;
          }
          log("note");
          break;
        case EV359:
          try {
            new S29();
            new S58();
            new S71();
            new S77();
          } catch (IOException e) {
            send("msg3");
            new S22();
            send("msg2");
          } catch (IOException e) {
            new S76();
            new S65();
            new S92();
          }
          if (x2 > 0) {
            new S86();
          } else {
            log("note");
          }
          send("msg6");
          new S68();
          break;
        case EV360:
          try {
            new S4();
            log("note");
            new S64();
          } catch (TimeoutException e) {
            new S84();
            new Helper();
            new S76();
          } finally {
            log("note");
            send("msg11");
            new S97();
          }
          new S63();
          break;
      }
    }
  }
  void reset() {
    new S89();
    new S49();
  }
  public void open() {
    if (x3 > 0) {
      if (x9 > 0) {
        new S66();
        new S36();
        if (x0 > 0) {
          send("msg14");
          new S38();
          send("msg17");
        } else {
          send("msg12");
        }
        if (x0 > 0) {
          send("msg17");
          new S41();
          new S18();
        } else {
          send("msg1");
          new S37();
          new S80();
        }
      }
    }
    switch (event) {
      case EV361:
        if (x2 > 0) {
          try {
            new S29();
            new S46();
            send("msg17");
            log("note");
          } catch (IOException e) {
            send("msg13");
            new State();
            send("msg12");
          } finally {
            new S11();
            new S64();
            new S39();
          }
          log("note");
          new S90();
        } else {
          switch (event) {
            case EV362:
              new S25();
              break;
          }
          try {
            new S57();
          } finally {
            send("msg19");
            new S35();
            new S33();
          }
          if (x6 > 0) {
            send("msg7");
          } else {
            new S33();
            new S78();
          }
        }
        break;
      case EV363:
        new S54();
        break;
    }
    new S20();
    new S41();
  }
  public void close() {
    new S87();
    switch (event) {
      case EV364:
        if (x1 > 0) {
          send("msg15");
          try {
            send("msg11");
          } catch (IllegalStateException e) {
            new S55();
            new S52();
            new S35();
            log("note");
          }
        }
        send("msg11");
        break;
    }
    if (x4 > 0) {
      send("msg12");
    } else {
      try {
        switch (event) {
          case EV365:
            log("note");
            new S59();
            new S31();
            new S29();
            break;
        }
        new S13();
      } finally {
        switch (event) {
          case EV366:
            new S10();
            new S8();
            break;
          case EV367:
            new S60();
            break;
        }
        new S27();
      }
    }
    try {
      try {
        send("msg14");
      } catch (IllegalStateException e) {
        send("msg2");
        new Helper();
      } catch (IllegalStateException e) {
        new S63();
        send("msg2");
        new S12();
      }
    } catch (TimeoutException e) {
      send("msg15");
    } catch (IOException e) {
      new S51();
      send("msg2");
      new S56();
      switch (event) {
        case EV368:
          new S36();
          break;
      }
    }
  }
  void start() {
    if (x5 > 0) {
      new S24();
      send("msg13");
    }
    send("msg10");
    new S20();
  }
  public void stop() {
    try {
      new S36();
      new S86();
      send("msg2");
    } catch (IOException e) {
      if (x5 > 0) {
        if (x4 > 0) {
          new S10();
          send("msg1");
          send("msg5");
          send("msg17");
        }
        switch (event) {
          case EV369:
            send("msg4");
            send("msg18");
            new S90();
            break;
          case EV370:
            send("msg19");
            break;
          case EV371:
            new S60();
            send("msg11");
            new S12();
            log("note");
            break;
        }
        new Helper();
      } else {
        new Helper();
      }
      try {
        send("msg14");
        log("note");
        new S40();
        send("msg1");
      } finally {
        new S47();
        log("note");
        send("msg10");
        new S87();
      }
    } finally {
      new S96();
      send("msg14");
      send("msg5");
    }
    try {
      try {
        try {
          new S5();
          new S48();
          new S38();
          send("msg10");
        } catch (IllegalStateException e) {
          send("msg14");
          new S10();
          new S77();
        }
        new S96();
        new S34();
        send("msg8");
      } finally {
        new S25();
      }
      send("msg16");
      switch (event) {
        case EV372:
          try {
            new S77();
            send("msg2");
          } catch (TimeoutException e) {
            log("note");
            send("msg6");
            new S71();
          } finally {
            send("msg15");
            new S84();
            send("msg16");
          }
          send("msg9");
          break;
      }
    } finally {
      new S5();
    }
    send("msg11");
  }
  void pause() {
    new S62();
    if (x0 > 0) {
      log("note");
      try {
        new S51();
        switch (event) {
          case EV373:
            new State();
            new S14();
            send("msg1");
            break;
          case EV374:
            new S19();
            send("msg0");
            new S64();
            break;
        }
      } catch (IOException e) {
        new S25();
      }
      new S2();
    } else {
      send("msg2");
      send("msg3");
    }
    new State();
    new S56();
  }
}
